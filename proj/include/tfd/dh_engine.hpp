#pragma once
// Duistermaat-Heckman evolution of [omega_t] and the level-set Euler class.
#include <optional>
#include <set>
#include <vector>

#include "tfd/errors.hpp"
#include "tfd/lattice.hpp"

namespace tfd {

struct CriticalProfile {
    std::set<int> interior_levels;  // subset of {-1, 0, 1}
    int m = 0;                      // isolated points at -1 (and at +1)
    int z0_components = 0;

    void validate() const;
    friend bool operator==(const CriticalProfile&, const CriticalProfile&) = default;
};

enum class Side { Min, Max };

struct ExtremalData {
    int b = 0;
    Side side = Side::Min;
};

// Reduced-space kind forced by the parity of b.
BaseKind extremal_kind(int b);
// k with b = 2k or b = 2k+1
int extremal_k(int b);

struct Slice {
    int lo = -2, hi = 2;
    SurfaceModel model;
    CohClass omega_lo;  // [omega_t] at t = lo
    CohClass euler;
    // after a blow-down: basis of this model as classes of the previous one
    std::vector<CohClass> pullback_basis;

    // [omega_t] = [omega_lo] - (t - lo) e
    std::vector<Rational> omega_at(Rational t) const;
    CohClass omega_at_int(int t) const;
    // pair(omega_t, omega_t) as a quadratic in t: {c0, c1, c2}
    std::vector<Rational> volume_poly() const;
};

CohClass extremal_euler(const ExtremalData& d, const SurfaceModel& m);

Slice cross_surface_wall(const Slice& s, const std::vector<CohClass>& z_classes, const CriticalProfile& p);
Slice cross_blowup_wall(const Slice& s, int m);
Slice cross_blowdown_wall(const Slice& s, const std::vector<CohClass>& cycles);

// Exact positivity of a quadratic c0 + c1 t + c2 t^2 on the open interval (lo, hi).
bool positive_on_open_interval(const std::vector<Rational>& q, Rational lo, Rational hi);
bool check_volume_collapse(const Slice& s);
bool check_interior_positive(const Slice& s);

// Ruled basis of the reduced space near the maximum, read off from the
// collapsing class omega_2 = (2 + b_max) x' and e(P_2^-) = -k x' + y'.
struct MaxRuling {
    CohClass fiber, section;
    int b_max;
};
std::optional<MaxRuling> max_side_ruling(const Slice& last);

struct DhInput {
    int b_min = 0;
    CriticalProfile profile;
    std::vector<CohClass> z0;      // classes in M_0
    std::vector<CohClass> cycles;  // vanishing cycles at +1, classes in M_0 = M_{1-eps}
};

struct DhSequence {
    std::vector<Slice> slices;
    const Slice& at_level(Rational t) const;  // slice whose closed range contains t (first match)
    const Slice& containing_zero() const;
    SurfaceModel model0() const { return containing_zero().model; }
    CohClass omega0() const;
    CohClass euler_minus2_plus() const { return slices.front().euler; }
    CohClass euler_plus2_minus() const { return slices.back().euler; }
};

// Builds the slice sequence with [omega_0] = c1(M_0). Throws TfdError on any
// wall inconsistency.
DhSequence assemble(const DhInput& in);

// Orientation reversal: t -> -t, e -> -e (slices in reverse order).
std::vector<Slice> mirror(const std::vector<Slice>& s);

}  // namespace tfd
