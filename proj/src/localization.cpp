#include "tfd/localization.hpp"

#include <algorithm>

#include "tfd/errors.hpp"

namespace tfd {

const char* shape_name(Shape s) {
    switch (s) {
        case Shape::Sphere: return "sphere";
        case Shape::Point: return "point";
        case Shape::Torus: return "torus";
    }
    return "?";
}

void FixedComponent::validate() const {
    if (level < -2 || level > 2) throw TfdError("invalid-component", "level out of range");
    if (shape == Shape::Point && level != -1 && level != 1)
        throw TfdError("invalid-component", "isolated points occur only at levels +-1");
    if (shape != Shape::Point && (level == -1 || level == 1))
        throw TfdError("invalid-component", "levels +-1 carry only isolated points");
    if (shape != Shape::Point && area < 1) throw TfdError("invalid-component", "non-positive area");
}

i64 contribution_c13(const FixedComponent& f) {
    f.validate();
    if (f.shape == Shape::Point) return -1;  // weights (-1,1,1) or (-1,-1,1): lambda^3 / (-lambda^3)
    if (f.level == -2 || f.level == 2) return 24 + 4 * (f.area - 2);
    return 0;
}

i64 chern_number(const CriticalProfile& p, int b_min, int b_max) {
    return 48 + 4 * (b_min + b_max) - 2 * p.m;
}

bool identity_int_one(int b_min, int b_max) { return b_min == b_max; }

bool identity_int_c1(const CriticalProfile& p, int b_min, int b_max, int vol_z0) {
    return b_min + b_max + 2 * p.m + vol_z0 == 4;
}

int betti2(const CriticalProfile& p) { return 1 + p.m + p.z0_components; }

std::vector<ProfileSolution> enumerate_profile_solutions(bool normalized) {
    std::vector<ProfileSolution> out;
    for (int m = 8; m >= 1; --m)
        for (int vol = 8; vol >= 1; --vol)
            for (int bmin = -1; bmin <= 8; ++bmin) {
                int bmax = 4 - 2 * m - vol - bmin;
                if (bmax < -1) continue;
                if (normalized && bmin > bmax) continue;
                out.push_back({m, vol, bmin, bmax});
            }
    return out;
}

namespace {

// alpha + beta u with u^2 = 0; coefficients are Laurent polynomials in lambda.
struct Elem {
    Laurent a, b;
};

void acc(Laurent& l, int deg, Rational v) {
    Rational r = l[deg] + v;
    if (r.sign() == 0) l.erase(deg);
    else l[deg] = r;
}

Laurent mul(const Laurent& x, const Laurent& y) {
    Laurent r;
    for (auto [dx, cx] : x)
        for (auto [dy, cy] : y) acc(r, dx + dy, cx * cy);
    return r;
}

Elem mul(const Elem& x, const Elem& y) {
    Elem r;
    r.a = mul(x.a, y.a);
    r.b = mul(x.a, y.b);
    for (auto [d, c] : mul(x.b, y.a)) acc(r.b, d, c);
    return r;
}

// (p + q u)^{-1} = p^{-1} - q p^{-2} u, p a monomial
Elem inverse(const Elem& x) {
    if (x.a.size() != 1) throw std::logic_error("leading term of the Euler class must be a monomial");
    auto [d, c] = *x.a.begin();
    Laurent pinv{{-d, Rational(1) / c}};
    Elem r;
    r.a = pinv;
    for (auto [dq, cq] : mul(x.b, mul(pinv, pinv))) acc(r.b, dq, -cq);
    return r;
}

Elem power(const Elem& x, int d) {
    Elem r;
    r.a[0] = Rational(1);
    for (int i = 0; i < d; ++i) r = mul(r, x);
    return r;
}

Laurent mono(int deg, i64 c) {
    Laurent l;
    if (c != 0) l[deg] = Rational(c);
    return l;
}

}  // namespace

EquivariantContribution residue(const FixedComponent& f, int d) {
    f.validate();
    EquivariantContribution out{f, {}};
    if (f.shape == Shape::Point) {
        // weights (-1,1,1) at level -1, (-1,-1,1) at level +1
        i64 s = f.level == -1 ? 1 : -1;
        i64 prod = f.level == -1 ? -1 : 1;
        Rational c = Rational(1);
        for (int i = 0; i < d; ++i) c = c * Rational(s);
        out.value[d - 3] = c / Rational(prod);
        return out;
    }
    if (f.shape == Shape::Torus) throw TfdError("unsupported", "torus residues are not modeled");
    Elem c1, e;
    if (f.level == -2 || f.level == 2) {
        i64 b = f.area - 2;
        i64 w = f.level == -2 ? 1 : -1;
        c1.a = mono(1, 2 * w);
        c1.b = mono(0, b + 2);
        e.a = mono(2, 1);
        e.b = mono(1, w * b);
    } else {
        if (d == 0 && !f.normal_chern) throw TfdError("missing-normal-data", "level-0 residue of 1 needs (b-, b+)");
        auto [bm, bp] = f.normal_chern.value_or(std::pair<i64, i64>{0, 0});
        c1.b = mono(0, f.area);
        e.a = mono(2, -1);
        e.b = mono(1, bm - bp);
    }
    Elem integrand = mul(power(c1, d), inverse(e));
    out.value = integrand.b;  // integrate over the sphere: coefficient of u
    return out;
}

Laurent integrate(const std::vector<FixedComponent>& comps, int d) {
    Laurent total;
    for (const auto& f : comps)
        for (auto [deg, c] : residue(f, d).value) acc(total, deg, c);
    return total;
}

i64 chern_number_series(const std::vector<FixedComponent>& comps) {
    Laurent l = integrate(comps, 3);
    for (auto [deg, c] : l)
        if (deg != 0 || !c.is_integer()) throw std::logic_error("c1^3 residue is not an integer constant");
    return l.count(0) ? l.at(0).num : 0;
}

}  // namespace tfd
