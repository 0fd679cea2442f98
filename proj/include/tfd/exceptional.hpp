#pragma once
// Exceptional (-1)-classes on blow-ups of P2 and the ruled/P2 basis changes.
#include <vector>

#include "tfd/lattice.hpp"

namespace tfd {

struct BasisChange {
    SurfaceModel source;
    SurfaceModel target;
    Matrix matrix;  // column j = image of source basis vector j, in target coordinates

    CohClass apply(const CohClass& c) const;
    CohClass apply_inverse(const CohClass& c) const;
};

// Exceptional classes of m (E^2 = -1, c1.E = 1). m must be X_k or a ruled
// surface blown up so that it is isometric to X_k, with k <= 8.
std::vector<CohClass> exceptional_classes(const SurfaceModel& m);

// Isometry from X_{k+1} (in the {u, E_i} basis) to the ruled model m.
BasisChange identify_ruled_basis(const SurfaceModel& m);
BasisChange identity_change(const SurfaceModel& m);

// Checks that the matrix intertwines gram and c1; throws otherwise.
void verify_isometry(const BasisChange& b);

}  // namespace tfd
