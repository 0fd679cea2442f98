#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tfd/errors.hpp"
#include "tfd/exceptional.hpp"

using namespace tfd;

namespace {

std::vector<std::string> texts(const SurfaceModel& m, const std::vector<CohClass>& cs) {
    std::vector<std::string> out;
    for (const auto& c : cs) out.push_back(format_class(m, c));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("exceptional counts on X_1..X_8") {
    const std::size_t expected[] = {1, 3, 6, 10, 16, 27, 56, 240};
    for (int k = 1; k <= 8; ++k) {
        auto m = make_model(BaseKind::P2, k);
        auto cs = exceptional_classes(m);
        CAPTURE(k);
        CHECK(cs.size() == expected[k - 1]);
        for (const auto& c : cs) {
            CHECK(self_pair(m, c) == -1);
            CHECK(pair(m, m.c1, c) == 1);
            CHECK(oracle::in_printed_list(c.coeffs));
        }
    }
}

TEST_CASE("exceptional classes agree with a wider brute force") {
    for (int k = 1; k <= 5; ++k) {
        auto cs = exceptional_classes(make_model(BaseKind::P2, k));
        std::vector<std::vector<i64>> lib;
        for (const auto& c : cs) lib.push_back(c.coeffs);
        std::sort(lib.begin(), lib.end());
        CHECK(lib == oracle::exceptional_brute(k));
    }
}

TEST_CASE("small cases by name") {
    auto x1 = make_model(BaseKind::P2, 1);
    CHECK(texts(x1, exceptional_classes(x1)) == std::vector<std::string>{"E1"});
    auto x2 = make_model(BaseKind::P2, 2);
    CHECK(texts(x2, exceptional_classes(x2)) == std::vector<std::string>{"E1", "E2", "u-E1-E2"});
}

TEST_CASE("k > 8 is refused") {
    CHECK_THROWS_AS(exceptional_classes(make_model(BaseKind::P2, 9)), TfdError);
}

TEST_CASE("ruled identifications") {
    auto x2 = make_model(BaseKind::P2, 2);
    std::vector<CohClass> src = {x2.unit(1), x2.unit(2), parse_class(x2, "u-E1-E2")};

    auto h1 = make_model(BaseKind::Hirzebruch, 1);
    auto bh = identify_ruled_basis(h1);
    std::vector<CohClass> img;
    for (const auto& c : src) img.push_back(bh.apply(c));
    CHECK(texts(h1, img) == std::vector<std::string>{"E1", "x-E1", "y"});
    CHECK(texts(h1, exceptional_classes(h1)) == std::vector<std::string>{"E1", "x-E1", "y"});

    auto s1 = make_model(BaseKind::S2xS2, 1);
    auto bs = identify_ruled_basis(s1);
    img.clear();
    for (const auto& c : src) img.push_back(bs.apply(c));
    CHECK(texts(s1, img) == std::vector<std::string>{"E1", "x-E1", "y-E1"});

    auto id = identity_change(x2);
    CHECK(id.matrix == Matrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK_THROWS(identify_ruled_basis(make_model(BaseKind::S2xS2)));
}

TEST_CASE("basis changes are isometries on random pairs") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-6, 6);
    int checked = 0;
    for (auto base : {BaseKind::S2xS2, BaseKind::Hirzebruch})
        for (int k = (base == BaseKind::S2xS2 ? 1 : 0); k <= 7; ++k) {
            auto b = identify_ruled_basis(make_model(base, k));
            CHECK_NOTHROW(verify_isometry(b));
            for (int t = 0; t < 70; ++t) {
                CohClass u(b.source.rank()), v(b.source.rank());
                for (std::size_t i = 0; i < u.size(); ++i) u[i] = coef(rng), v[i] = coef(rng);
                CHECK(pair(b.source, u, v) == pair(b.target, b.apply(u), b.apply(v)));
                CHECK(b.apply_inverse(b.apply(u)) == u);
                ++checked;
            }
        }
    CHECK(checked >= 1000);
}
