#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "tfd/classifier.hpp"
#include "tfd/errors.hpp"
#include "tfd/localization.hpp"

using namespace tfd;

namespace {

CriticalProfile profile(std::set<int> levels, int m, int z0) {
    CriticalProfile p;
    p.interior_levels = levels;
    p.m = m;
    p.z0_components = z0;
    return p;
}

FixedComponent sphere(int level, i64 area, std::optional<std::pair<i64, i64>> nc = {}) {
    FixedComponent f;
    f.level = level;
    f.shape = Shape::Sphere;
    f.area = area;
    f.normal_chern = nc;
    return f;
}

FixedComponent point(int level) {
    FixedComponent f;
    f.level = level;
    f.shape = Shape::Point;
    return f;
}

}  // namespace

TEST_CASE("per-component c1^3 contributions") {
    CHECK(contribution_c13(sphere(-2, 4)) == 32);
    CHECK(contribution_c13(sphere(2, 4)) == 32);
    CHECK(contribution_c13(sphere(-2, 1)) == 20);
    CHECK(contribution_c13(sphere(0, 2, std::pair<i64, i64>{0, 0})) == 0);
    // one point at each of levels -1 and +1 together remove 2
    CHECK(contribution_c13(point(-1)) + contribution_c13(point(1)) == -2);
    CHECK_THROWS_AS(contribution_c13(point(0)), TfdError);
}

TEST_CASE("closed form of c1^3") {
    CHECK(chern_number(profile({}, 0, 0), 2, 2) == 64);
    CHECK(chern_number(profile({-1, 1}, 3, 0), -1, -1) == 34);
    CHECK(chern_number(profile({-1, 0, 1}, 1, 1), 0, 1) == 50);
    CHECK(chern_number(profile({-1, 0, 1}, 2, 2), -1, -1) == 36);
}

TEST_CASE("second Betti number") {
    CHECK(betti2(profile({}, 0, 0)) == 1);
    CHECK(betti2(profile({-1, 0, 1}, 2, 2)) == 5);
    CHECK(betti2(profile({-1, 1}, 3, 0)) == 4);
    // additive: each point pair and each level-0 surface adds one
    for (int m = 0; m <= 3; ++m)
        for (int z = 0; z <= 2; ++z) CHECK(betti2(profile({}, m, z)) == 1 + m + z);
}

TEST_CASE("localization identities") {
    CHECK(identity_int_one(1, 1));
    CHECK_FALSE(identity_int_one(0, 1));
    CHECK(identity_int_one(-1, -1));
    CHECK(identity_int_c1(profile({-1, 0, 1}, 2, 1), -1, -1, 2));
    CHECK(identity_int_c1(profile({-1, 0, 1}, 1, 1), -1, -1, 4));
    CHECK_FALSE(identity_int_c1(profile({-1, 0, 1}, 2, 1), 0, 0, 3));
}

TEST_CASE("13 profile solutions, 8 with b_min <= b_max") {
    auto all = enumerate_profile_solutions();
    auto norm = enumerate_profile_solutions(true);
    CHECK(all.size() == 13);
    CHECK(norm.size() == 8);
    CHECK(std::find(all.begin(), all.end(), ProfileSolution{1, 1, -1, 2}) != all.end());
    // independent count over a wide box
    int n = 0, nn = 0;
    for (int m = 1; m <= 2; ++m)
        for (int vol = 1; vol <= 20; ++vol)
            for (int a = -1; a <= 20; ++a)
                for (int b = -1; b <= 20; ++b)
                    if (a + b + 2 * m + vol == 4) ++n, nn += a <= b;
    CHECK(n == 13);
    CHECK(nn == 8);
    for (const auto& s : all) CHECK((s.m == 1 || s.m == 2));
}

TEST_CASE("case III closure of the two identities") {
    std::set<std::pair<int, int>> sols;
    for (int m = 1; m <= 10; ++m)
        for (int b = -1; b <= 10; ++b)
            if (identity_int_one(b, b) && identity_int_c1(profile({-1, 1}, m, 0), b, b, 0)) sols.insert({b, m});
    CHECK(sols == std::set<std::pair<int, int>>{{1, 1}, {0, 2}, {-1, 3}});
}

TEST_CASE("residues agree with the direct formula") {
    std::vector<FixedComponent> comps = {sphere(-2, 4), sphere(0, 2, std::pair<i64, i64>{0, 0}), sphere(2, 2)};
    for (const auto& f : comps)
        for (int d : {0, 1, 3}) {
            auto r = residue(f, d);
            Rational got = r.value.count(d - 3) ? r.value.at(d - 3) : Rational(0);
            CHECK(got == oracle::localization_term(f, d));
        }
    auto p = point(1);
    CHECK(residue(p, 3).value.at(0) == oracle::localization_term(p, 3));
}

TEST_CASE("series path reproduces c1^3 and the vanishing integrals on every record") {
    for (const auto& r : classify_all()) {
        CAPTURE(r.case_id);
        CHECK(chern_number_series(r.fixed) == r.c1_cubed);
        i64 sum = 0;
        for (const auto& f : r.fixed) sum += contribution_c13(f);
        CHECK(sum == r.c1_cubed);
        CHECK(integrate(r.fixed, 0).empty());
        CHECK(integrate(r.fixed, 1).empty());
    }
}

TEST_CASE("torus components are not modeled by the residue path") {
    FixedComponent t;
    t.level = 0;
    t.shape = Shape::Torus;
    t.genus = 1;
    t.area = 2;
    t.normal_chern = std::pair<i64, i64>{0, 0};
    CHECK_THROWS_AS(residue(t, 3), TfdError);
}
