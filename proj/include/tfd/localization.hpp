#pragma once
// Equivariant localization over the fixed point set: closed forms and a
// Laurent-series residue path used for cross-checking.
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tfd/dh_engine.hpp"
#include "tfd/lattice.hpp"

namespace tfd {

enum class Shape { Sphere, Point, Torus };
const char* shape_name(Shape s);

struct FixedComponent {
    int level = 0;
    Shape shape = Shape::Point;
    int genus = 0;
    std::optional<CohClass> pd_class;
    i64 area = 0;
    std::optional<std::pair<i64, i64>> normal_chern;  // (b-, b+) for level-0 surfaces

    void validate() const;
};

// Laurent data in the equivariant generator lambda: degree -> coefficient.
using Laurent = std::map<int, Rational>;

struct EquivariantContribution {
    FixedComponent component;
    Laurent value;
};

struct ProfileSolution {
    int m, vol, b_min, b_max;
    friend bool operator==(const ProfileSolution&, const ProfileSolution&) = default;
};

i64 contribution_c13(const FixedComponent& f);
i64 chern_number(const CriticalProfile& p, int b_min, int b_max);
bool identity_int_one(int b_min, int b_max);
bool identity_int_c1(const CriticalProfile& p, int b_min, int b_max, int vol_z0);
int betti2(const CriticalProfile& p);
// All (m, vol, b_min, b_max) with b_min + b_max + 2m + vol = 4, m >= 1, vol >= 1, b >= -1;
// ordered by m descending, vol descending, b_min ascending.
std::vector<ProfileSolution> enumerate_profile_solutions(bool normalized = false);

// Residue of  c1^d / e  at one component (d in {0, 1, 3}).
EquivariantContribution residue(const FixedComponent& f, int d);
// Sum of residues over all components.
Laurent integrate(const std::vector<FixedComponent>& comps, int d);
// c1^3 via the residue path (degree-0 coefficient of the d=3 integral).
i64 chern_number_series(const std::vector<FixedComponent>& comps);

}  // namespace tfd
