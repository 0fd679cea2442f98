#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "tfd/lattice.hpp"

using namespace tfd;

TEST_CASE("standard models have the expected gram and c1") {
    auto s = make_model(BaseKind::S2xS2);
    CHECK(s.gram == Matrix{{0, 1}, {1, 0}});
    CHECK(format_class(s, s.c1) == "2x+2y");
    auto h = make_model(BaseKind::Hirzebruch);
    CHECK(h.gram == Matrix{{0, 1}, {1, -1}});
    CHECK(format_class(h, h.c1) == "3x+2y");
    auto p = make_model(BaseKind::P2, 2);
    CHECK(format_class(p, p.c1) == "3u-E1-E2");
}

TEST_CASE("blow-up appends a -1 class and subtracts it from c1") {
    auto s1 = blow_up(make_model(BaseKind::S2xS2));
    CHECK(format_class(s1, s1.c1) == "2x+2y-E1");
    auto h1 = blow_up(make_model(BaseKind::Hirzebruch));
    CHECK(format_class(h1, h1.c1) == "3x+2y-E1");
    CHECK(self_pair(h1, h1.unit(2)) == -1);
    CHECK(h1.name() == "E_{S^2} # P2bar");
    CHECK(make_model(BaseKind::S2xS2, 2).name() == "S^2 x S^2 # 2 P2bar");
}

TEST_CASE("every constructed form is unimodular of signature (1, n-1)") {
    for (auto base : {BaseKind::P2, BaseKind::S2xS2, BaseKind::Hirzebruch})
        for (int k = 0; k <= 8; ++k) {
            auto m = make_model(base, k);
            CAPTURE(m.name());
            CHECK(std::abs(determinant(m.gram)) == 1);
            auto [pos, neg] = signature(m.gram);
            CHECK(pos == 1);
            CHECK(neg == static_cast<int>(m.rank()) - 1);
            CHECK_NOTHROW(validate_model(m));
            CHECK(self_pair(m, m.c1) == (base == BaseKind::P2 ? 9 : 8) - k);
        }
}

TEST_CASE("signature of an indefinite even form") {
    CHECK(signature({{0, 1}, {1, 0}}) == std::pair<int, int>{1, 1});
    CHECK(signature({{2, 1}, {1, 2}}) == std::pair<int, int>{2, 0});
    CHECK(determinant({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}}) == 4);
}

TEST_CASE("pairing and areas") {
    auto h = make_model(BaseKind::Hirzebruch, 1);
    auto z = parse_class(h, "2x+y-E1");
    CHECK(symplectic_area(h, h.c1, z) == 4);
    CHECK(self_pair(h, z) == 2 * 2 * 0 + 2 * 2 * 1 - 1 - 1);
    CHECK(pair(h, h.unit(0), h.unit(1)) == 1);
}

TEST_CASE("class text round trip") {
    auto m = make_model(BaseKind::S2xS2, 3);
    for (const char* t : {"x", "-y", "2x+2y-E1-E2-E3", "x-E1", "E3", "0", "-3x+12y+E2"}) {
        CHECK(format_class(m, parse_class(m, t)) == t);
    }
    CHECK_THROWS(parse_class(m, "x+z"));
    CHECK_THROWS(parse_class(m, "E4"));
    CHECK_THROWS(format_class(m, CohClass{1, 2}));
}

TEST_CASE("pullback pads with zeros") {
    CohClass c{1, -1};
    CHECK(pullback(c, 4) == CohClass{1, -1, 0, 0});
    CHECK_THROWS(pullback(CohClass{1, 2, 3}, 2));
}

TEST_CASE("checked arithmetic refuses overflow") {
    CHECK_THROWS_AS(mul(INT64_MAX, 2), std::overflow_error);
    CHECK_THROWS_AS(add(INT64_MAX, 1), std::overflow_error);
    CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
    CHECK(Rational(-4, -6).str() == "2/3");
    CHECK_THROWS(Rational(1, 0));
}
