#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "tfd/errors.hpp"
#include "tfd/splitting.hpp"

using namespace tfd;

namespace {

std::vector<std::vector<std::string>> texts(const SurfaceModel& m, const std::vector<Splitting>& ss) {
    std::vector<std::vector<std::string>> out;
    for (const auto& s : ss) {
        std::vector<std::string> parts;
        for (const auto& p : s.parts) parts.push_back(format_class(m, p.pd_class));
        out.push_back(parts);
    }
    return out;
}

std::vector<std::vector<std::string>> split(const SurfaceModel& m, const char* total, i64 vol) {
    return texts(m, enumerate_splittings(m, m.c1, parse_class(m, total), vol));
}

using Parts = std::vector<std::vector<std::string>>;

}  // namespace

TEST_CASE("adjunction genus") {
    auto s = make_model(BaseKind::S2xS2);
    CHECK(adjunction_genus(s, parse_class(s, "x+y")) == 0);
    CHECK(adjunction_genus(s, parse_class(s, "2x+2y")) == 1);
    CHECK(adjunction_genus(s, parse_class(s, "2x")) == -1);
}

TEST_CASE("connected and split level-0 classes") {
    auto s = make_model(BaseKind::S2xS2);
    CHECK(split(s, "x+y", 4) == Parts{{"x+y"}});
    CHECK(split(s, "2y", 4) == Parts{{"y", "y"}});
    auto h = make_model(BaseKind::Hirzebruch);
    CHECK(split(h, "2x+2y", 6) == Parts{{"2x+2y"}});
    auto h2 = make_model(BaseKind::Hirzebruch, 2);
    CHECK(split(h2, "2x+y-2E1-E2", 2) == Parts{{"x-E1", "x+y-E1-E2"}});
}

TEST_CASE("branches pruned by adjunction") {
    auto h2 = make_model(BaseKind::Hirzebruch, 2);
    CHECK(reject_if_no_splitting(h2, h2.c1, parse_class(h2, "2x+2y-2E1-2E2"), 2));
    auto h1 = make_model(BaseKind::Hirzebruch, 1);
    CHECK(reject_if_no_splitting(h1, h1.c1, parse_class(h1, "x+2y-2E1"), 2));
    CHECK_FALSE(reject_if_no_splitting(h1, h1.c1, parse_class(h1, "E1"), 1));
}

TEST_CASE("non-positive volume is an input error") {
    auto s = make_model(BaseKind::S2xS2);
    CHECK_THROWS_AS(enumerate_splittings(s, s.c1, s.zero(), 0), TfdError);
    CHECK_THROWS_AS(enumerate_splittings(s, s.c1, parse_class(s, "x+y"), 3), TfdError);
}

TEST_CASE("every splitting sums to the total and satisfies adjunction") {
    auto h2 = make_model(BaseKind::Hirzebruch, 2);
    for (const char* t : {"2x+y-2E1-E2", "x+y-E1", "x+2y-E1-E2", "2x+2y-E1-E2"}) {
        auto total = parse_class(h2, t);
        i64 vol = pair(h2, h2.c1, total);
        if (vol < 1) continue;
        for (const auto& s : enumerate_splittings(h2, h2.c1, total, vol)) {
            CohClass sum = h2.zero();
            for (const auto& p : s.parts) {
                sum = sum + p.pd_class;
                CHECK(p.genus == adjunction_genus(h2, p.pd_class));
                CHECK(p.area == pair(h2, h2.c1, p.pd_class));
            }
            CHECK(sum == total);
        }
    }
}

TEST_CASE("agreement with the unpruned oracle for vol <= 6 on rank <= 4") {
    int compared = 0;
    std::vector<SurfaceModel> models = {make_model(BaseKind::S2xS2), make_model(BaseKind::Hirzebruch),
                                        make_model(BaseKind::Hirzebruch, 1), make_model(BaseKind::S2xS2, 2)};
    for (const auto& m : models) {
        // every total with small coefficients and area in [1, 6]
        std::vector<i64> lo(m.rank(), -2), c = lo;
        auto next = [&] {
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (++c[i] <= 2) return true;
                c[i] = -2;
            }
            return false;
        };
        do {
            CohClass total(c);
            i64 vol = pair(m, m.c1, total);
            if (vol < 1 || vol > 6) continue;
            CAPTURE(format_class(m, total));
            CHECK(oracle::part_lists(enumerate_splittings(m, m.c1, total, vol)) ==
                  oracle::splittings_brute(m, m.c1, total, vol));
            ++compared;
        } while (next());
    }
    CHECK(compared > 50);
}
