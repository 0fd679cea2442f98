#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>

#include "doctest.h"
#include "tfd/errors.hpp"
#include "tfd/toric.hpp"

using namespace tfd;
namespace fs = std::filesystem;

namespace {

DelzantPolytope simplex(i64 s) { return make_polytope(3, {{0, 0, 0}, {s, 0, 0}, {0, s, 0}, {0, 0, s}}); }

DelzantPolytope box(i64 a, i64 b, i64 c) {
    std::vector<Point> v;
    for (i64 x : {i64(0), a})
        for (i64 y : {i64(0), b})
            for (i64 z : {i64(0), c}) v.push_back({x, y, z});
    return make_polytope(3, v);
}

std::string code_of(auto&& f) {
    try {
        f();
    } catch (const TfdError& e) {
        return e.code();
    }
    return "ok";
}

}  // namespace

TEST_CASE("lattice lengths") {
    CHECK(lattice_length({0, 0, 0}, {4, 0, 0}) == 4);
    CHECK(lattice_length({0, 0, 0}, {2, 2, 0}) == 2);
    CHECK(lattice_length({1, 0, 3}, {1, 3, 0}) == 3);
    // additive along a segment
    Point a{0, 0, 0}, b{2, -2, 4}, c{3, -3, 6};
    CHECK(lattice_length(a, c) == lattice_length(a, b) + lattice_length(b, c));
}

TEST_CASE("polytope structure") {
    auto p = simplex(4);
    CHECK(p.edges.size() == 6);
    CHECK(p.facets.size() == 4);
    CHECK(normalized_volume(p) == 64);
    auto c = box(2, 2, 2);
    CHECK(c.edges.size() == 12);
    CHECK(c.facets.size() == 6);
    CHECK(normalized_volume(c) == 48);
    for (int v = 0; v < 8; ++v) CHECK(c.star(v).size() == 3);
}

TEST_CASE("non-Delzant input is refused") {
    CHECK(code_of([] { make_polytope(2, {{0, 0}, {1, 0}, {0, 2}}); }) == "not-delzant");
    // square pyramid: the apex lies on four facets
    CHECK(code_of([] { make_polytope(3, {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {2, 2, 0}, {1, 1, 1}}); }) ==
          "not-delzant");
    CHECK_NOTHROW(make_polytope(2, {{0, 0}, {2, 0}, {0, 2}}));
}

TEST_CASE("circle subgroups") {
    CHECK(code_of([] { CircleSubgroup{{0, 0, 0}}.validate(3); }) == "invalid-xi");
    CHECK(code_of([] { CircleSubgroup{{2, 0, 2}}.validate(3); }) == "invalid-xi");
    CHECK(code_of([] { CircleSubgroup{{1, 0}}.validate(3); }) == "invalid-xi");
}

TEST_CASE("fixed faces and semifreeness") {
    auto p = simplex(4);
    CircleSubgroup s{{1, 1, 0}};
    CHECK(is_semifree(p, s));
    auto f = fixed_faces(p, s);
    REQUIRE(f.size() == 2);
    CHECK(f[0].vertices.size() == 2);
    CHECK(f[1].vertices.size() == 2);
    CHECK_FALSE(is_semifree(p, {{2, 1, 0}}));
    CHECK(code_of([&] { balanced_values(p, {{2, 1, 0}}); }) == "not-semifree");
    // a generic circle fixes only the vertices
    auto g = fixed_faces(p, {{1, 2, 4}});
    CHECK(g.size() == 4);
    for (const auto& x : g) CHECK(x.vertices.size() == 1);

    auto c = box(2, 2, 2);
    CircleSubgroup sc{{1, 0, 1}};
    CHECK(is_semifree(c, sc));
    auto fc = fixed_faces(c, sc);
    CHECK(fc.size() == 4);
    for (const auto& x : fc) CHECK(x.vertices.size() == 2);
}

TEST_CASE("balanced values") {
    auto v7 = make_polytope(3, {{0, 0, 0}, {4, 0, 0}, {0, 4, 0}, {0, 0, 2}, {2, 0, 2}, {0, 2, 2}});
    auto r = balanced_values(v7, {{1, 1, 0}});
    CHECK(r.balanced_shift == Rational(-2));
    CHECK(r.b_min == 0);
    CHECK(r.b_max == 2);
    CHECK(r.components.back().level == 2);
    CHECK(r.components.back().area == 4);
    CHECK(r.components.front().area == 2);
    CHECK(*r.b2 == 2);
    CHECK(*r.c1_cubed == 56);

    auto pf1 = make_polytope(3, {{0, 0, 0}, {0, 2, 0}, {3, 0, 0}, {3, 2, 0}, {1, 0, 2}, {1, 2, 2}, {0, 0, 2}, {0, 2, 2}});
    auto q = balanced_values(pf1, {{0, 1, -1}});
    CHECK(q.components.front().area == 1);
    CHECK(q.components.back().area == 3);
    CHECK(q.b_min == -1);
    CHECK(q.b_max == 1);

    auto cube = balanced_values(box(2, 2, 2), {{1, 0, 1}});
    CHECK(cube.b_min == 0);
    CHECK(cube.b_max == 0);
    CHECK(cube.components.size() == 4);
    for (const auto& comp : cube.components)
        if (comp.level == 0) CHECK(*comp.selfint == 0);
}

TEST_CASE("a non-monotone box is not balanced") {
    CHECK(code_of([] { balanced_values(box(2, 2, 4), {{1, 0, 1}}); }) == "not-balanced-compatible");
}

TEST_CASE("every shipped fixture matches its expected record") {
    auto recs = classify_all();
    int n = 0;
    for (const auto& e : fs::directory_iterator(TFD_FIXTURES)) {
        if (e.path().extension() != ".txt") continue;
        auto f = load_fixture(e.path().string());
        CAPTURE(e.path().string());
        REQUIRE(f.expect);
        CHECK(*f.expect == e.path().stem().string());
        CHECK(match_tfd(fixture_report(f), recs) == *f.expect);
        ++n;
    }
    CHECK(n == 21);
}

TEST_CASE("matching is strict") {
    auto recs = classify_all();
    // P^3 with the wrong scale is not monotone, so its volume disagrees
    auto wrong = parse_fixture("dim 3\n0 0 0\n2 0 0\n0 2 0\n0 0 2\nxi: 1 1 0\n");
    CHECK(code_of([&] { match_tfd(fixture_report(wrong), recs); }) != "ok");
    // a report with no matching record
    auto none = parse_fixture("report\nfixed -2 sphere 5\nfixed 2 sphere 5\n");
    CHECK(code_of([&] { match_tfd(fixture_report(none), recs); }) == "ambiguous-match");
    // a reversed report is matched after flipping
    auto flipped = parse_fixture("report\nfixed -2 sphere 4\nfixed 0 sphere 2\nfixed 2 sphere 2\n");
    CHECK(match_tfd(fixture_report(flipped), recs) == "II-1.2");
}

TEST_CASE("fixture parse errors") {
    for (const char* bad : {"", "dim x\n", "dim 3\n0 0\nxi: 1 0 0\n", "dim 3\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n",
                            "report\nfixed -2 sphere\n", "report\nfixed 0 cone 2\n", "report\nfixed -1 point\n",
                            "dim 3\n0 0 0\nexpect: a b\n"}) {
        CAPTURE(bad);
        CHECK(code_of([&] { fixture_report(parse_fixture(bad)); }) == "parse");
    }
    CHECK(code_of([] { load_fixture("/nonexistent/fixture.txt"); }) == "parse");
    auto ok = parse_fixture("# comment\ndim 3\n0 0 0\n4 0 0\n0 4 0\n0 0 4  # trailing\nxi: 1 1 0\nexpect: I-1\n");
    CHECK(*ok.expect == "I-1");
    CHECK(ok.polytope->vertices.size() == 4);
}
