#include "tfd/splitting.hpp"

#include <algorithm>
#include <cstdlib>

#include "tfd/errors.hpp"

namespace tfd {

int adjunction_genus(const SurfaceModel& m, const CohClass& z) {
    i64 twice = sub(add(self_pair(m, z), 2), pair(m, m.c1, z));  // 2g = z^2 - c1.z + 2
    if (twice < 0 || twice % 2 != 0) return -1;
    return static_cast<int>(twice / 2);
}

void sort_parts(std::vector<SplitPart>& parts) {
    std::sort(parts.begin(), parts.end(), [](const SplitPart& a, const SplitPart& b) {
        if (a.area != b.area) return a.area < b.area;
        return a.pd_class < b.pd_class;
    });
}

std::vector<Splitting> enumerate_splittings(const SurfaceModel& m, const CohClass& omega, const CohClass& total,
                                            i64 vol) {
    if (vol <= 0) throw TfdError("empty-input", "level-0 volume must be positive");
    if (pair(m, omega, total) != vol) throw TfdError("invalid-class", "total class does not have area vol");
    std::size_t n = m.rank();

    // candidate parts: area in [1, vol], coefficients within |total_i| + 3, valid genus
    std::vector<SplitPart> cands;
    std::vector<i64> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        i64 a = std::abs(total[i]) + 3;
        lo[i] = -a;
        hi[i] = a;
    }
    CohClass z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = lo[i];
    while (true) {
        i64 area = pair(m, omega, z);
        if (area >= 1 && area <= vol) {
            int g = adjunction_genus(m, z);
            if (g >= 0) cands.push_back({z, g, area});
        }
        std::size_t i = 0;
        while (i < n && z[i] == hi[i]) z[i] = lo[i], ++i;
        if (i == n) break;
        ++z[i];
    }
    std::sort(cands.begin(), cands.end(), [](const SplitPart& a, const SplitPart& b) { return a.pd_class < b.pd_class; });

    std::vector<Splitting> out;
    std::vector<std::size_t> chosen;
    // multisets as non-decreasing index sequences
    auto rec = [&](auto&& self, std::size_t start, const CohClass& rest, i64 rest_vol) -> void {
        if (rest_vol == 0) {
            if (!rest.is_zero()) return;
            Splitting s;
            for (std::size_t k : chosen) s.parts.push_back(cands[k]);
            sort_parts(s.parts);
            out.push_back(std::move(s));
            return;
        }
        for (std::size_t k = start; k < cands.size(); ++k) {
            const auto& c = cands[k];
            if (c.area > rest_vol) continue;
            bool ok = true;
            for (std::size_t j : chosen)
                if (pair(m, cands[j].pd_class, c.pd_class) != 0) { ok = false; break; }
            if (!ok) continue;
            chosen.push_back(k);
            self(self, k, rest - c.pd_class, rest_vol - c.area);
            chosen.pop_back();
        }
    };
    rec(rec, 0, total, vol);
    std::sort(out.begin(), out.end(), [](const Splitting& a, const Splitting& b) {
        if (a.parts.size() != b.parts.size()) return a.parts.size() < b.parts.size();
        for (std::size_t i = 0; i < a.parts.size(); ++i)
            if (a.parts[i].pd_class != b.parts[i].pd_class) return a.parts[i].pd_class < b.parts[i].pd_class;
        return false;
    });
    return out;
}

bool reject_if_no_splitting(const SurfaceModel& m, const CohClass& omega, const CohClass& total, i64 vol) {
    return enumerate_splittings(m, omega, total, vol).empty();
}

}  // namespace tfd
