#pragma once
// Decompositions of the level-0 class into embedded symplectic components.
#include <vector>

#include "tfd/lattice.hpp"

namespace tfd {

struct SplitPart {
    CohClass pd_class;
    int genus = 0;
    i64 area = 0;
    friend bool operator==(const SplitPart&, const SplitPart&) = default;
};

struct Splitting {
    std::vector<SplitPart> parts;
    friend bool operator==(const Splitting&, const Splitting&) = default;
};

// genus forced by adjunction, or -1 if negative or half-integral
int adjunction_genus(const SurfaceModel& m, const CohClass& z);

std::vector<Splitting> enumerate_splittings(const SurfaceModel& m, const CohClass& omega, const CohClass& total,
                                            i64 vol);
bool reject_if_no_splitting(const SurfaceModel& m, const CohClass& omega, const CohClass& total, i64 vol);

// Canonical order of parts: by (area, class).
void sort_parts(std::vector<SplitPart>& parts);

}  // namespace tfd
