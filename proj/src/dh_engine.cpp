#include "tfd/dh_engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "tfd/exceptional.hpp"

namespace tfd {

void CriticalProfile::validate() const {
    for (int l : interior_levels)
        if (l < -1 || l > 1) throw TfdError("bad-profile", "interior level outside {-1,0,1}");
    bool pts = interior_levels.count(-1) > 0;
    if (pts != (interior_levels.count(1) > 0))
        throw TfdError("bad-profile", "levels -1 and +1 must appear together (|Z_1| = |Z_-1|)");
    if (pts != (m > 0)) throw TfdError("bad-profile", "point count disagrees with levels +-1");
    if ((interior_levels.count(0) > 0) != (z0_components > 0))
        throw TfdError("bad-profile", "surface count disagrees with level 0");
}

BaseKind extremal_kind(int b) { return (b % 2 == 0) ? BaseKind::S2xS2 : BaseKind::Hirzebruch; }

int extremal_k(int b) { return (b >= 0) ? b / 2 : -((-b + 1) / 2); }

std::vector<Rational> Slice::omega_at(Rational t) const {
    std::vector<Rational> r(omega_lo.size());
    Rational dt = t - Rational(lo);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = Rational(omega_lo[i]) - dt * Rational(euler[i]);
    return r;
}

CohClass Slice::omega_at_int(int t) const { return omega_lo - static_cast<i64>(t - lo) * euler; }

std::vector<Rational> Slice::volume_poly() const {
    // omega_t = (omega_lo + lo e) - t e =: A - t e
    CohClass a = omega_lo + static_cast<i64>(lo) * euler;
    i64 aa = pair(model, a, a), ae = pair(model, a, euler), ee = pair(model, euler, euler);
    return {Rational(aa), Rational(mul(-2, ae)), Rational(ee)};
}

CohClass extremal_euler(const ExtremalData& d, const SurfaceModel& m) {
    if (m.rank() != 2 || m.base == BaseKind::P2 || extremal_kind(d.b) != m.base)
        throw TfdError("inconsistent-extremum", "b=" + std::to_string(d.b) + " does not fit " + m.name());
    i64 k = extremal_k(d.b);
    CohClass e = d.side == Side::Min ? CohClass{k, -1} : CohClass{-k, 1};
    if (pair(m, e, e) != -d.b) throw std::logic_error("extremal Euler class square mismatch");
    return e;
}

namespace {

Slice continuation(const Slice& s) {
    Slice r = s;
    r.pullback_basis.clear();
    r.omega_lo = s.omega_at_int(s.hi);
    r.lo = s.hi;
    r.hi = 2;
    return r;
}

Rational eval(const std::vector<Rational>& q, Rational t) { return q[0] + t * (q[1] + t * q[2]); }

// Row-style Hermite reduction of integer generators; returns a basis of their span.
std::vector<CohClass> lattice_basis(std::vector<CohClass> rows) {
    std::vector<CohClass> basis;
    if (rows.empty()) return basis;
    std::size_t n = rows.front().size();
    for (std::size_t col = 0; col < n && !rows.empty(); ++col) {
        while (true) {
            std::size_t piv = rows.size();
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (rows[i][col] != 0 && (piv == rows.size() || std::abs(rows[i][col]) < std::abs(rows[piv][col])))
                    piv = i;
            if (piv == rows.size()) break;
            bool done = true;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == piv || rows[i][col] == 0) continue;
                rows[i] -= (rows[i][col] / rows[piv][col]) * rows[piv];
                if (rows[i][col] != 0) done = false;
            }
            if (done) {
                basis.push_back(rows[piv]);
                rows.erase(rows.begin() + static_cast<long>(piv));
                break;
            }
        }
        rows.erase(std::remove_if(rows.begin(), rows.end(), [](const CohClass& r) { return r.is_zero(); }),
                   rows.end());
    }
    return basis;
}

}  // namespace

Slice cross_surface_wall(const Slice& s, const std::vector<CohClass>& z_classes, const CriticalProfile& p) {
    if (p.z0_components > 0 && z_classes.empty())
        throw TfdError("missing-fixed-surfaces", "profile expects level-0 surfaces");
    if (static_cast<int>(z_classes.size()) != p.z0_components)
        throw TfdError("missing-fixed-surfaces", "surface count disagrees with profile");
    Slice r = continuation(s);
    for (const auto& z : z_classes) {
        if (z.size() != s.model.rank()) throw TfdError("invalid-class", "rank mismatch");
        r.euler += z;
    }
    return r;
}

Slice cross_blowup_wall(const Slice& s, int m) {
    Slice r = continuation(s);
    for (int i = 0; i < m; ++i) r.model = blow_up(r.model);
    std::size_t n = r.model.rank();
    r.omega_lo = pullback(r.omega_lo, n);
    r.euler = pullback(s.euler, n);
    for (std::size_t i = s.model.rank(); i < n; ++i) r.euler[i] = 1;
    return r;
}

Slice cross_blowdown_wall(const Slice& s, const std::vector<CohClass>& cycles) {
    if (cycles.empty()) return continuation(s);
    const SurfaceModel& m = s.model;
    CohClass w = s.omega_at_int(s.hi);
    for (const auto& c : cycles) {
        if (c.size() != m.rank()) throw TfdError("invalid-class", "rank mismatch");
        if (self_pair(m, c) != -1 || pair(m, m.c1, c) != 1)
            throw TfdError("not-exceptional", format_class(m, c) + " is not an exceptional class");
        if (pair(m, w, c) != 0) throw TfdError("not-a-wall", format_class(m, c) + " has nonzero area");
    }
    for (std::size_t i = 0; i < cycles.size(); ++i)
        for (std::size_t j = i + 1; j < cycles.size(); ++j)
            if (cycles[i] == cycles[j] || pair(m, cycles[i], cycles[j]) != 0)
                throw TfdError("simultaneous-blowdown-inconsistency", "vanishing cycles are not orthogonal");
    bool enumerable = !(m.base == BaseKind::S2xS2 && m.blowups == 0) && m.rank() <= 9;
    for (const auto& e : enumerable ? exceptional_classes(m) : std::vector<CohClass>{}) {
        if (pair(m, w, e) == 0 && std::find(cycles.begin(), cycles.end(), e) == cycles.end())
            throw TfdError("second-vanishing-class", format_class(m, e) + " also has zero area");
    }
    for (const auto& c : cycles)
        if (pair(m, s.euler, c) != 1)
            throw TfdError("euler-mismatch", "e(P^-) pairs to " + std::to_string(pair(m, s.euler, c)) + " with " +
                                                 format_class(m, c));

    auto proj = [&](const CohClass& v) {
        CohClass r = v;
        for (const auto& c : cycles) r += pair(m, v, c) * c;
        return r;
    };
    std::vector<CohClass> gens;
    for (std::size_t i = 0; i < m.rank(); ++i) gens.push_back(proj(m.unit(i)));
    auto basis = lattice_basis(gens);
    if (basis.size() != 2)
        throw TfdError("unsupported-target", "blow-down target has rank " + std::to_string(basis.size()));

    CohClass c1p = m.c1;
    for (const auto& c : cycles) c1p += c;
    CohClass ep = proj(s.euler);
    bool even = self_pair(m, basis[0]) % 2 == 0 && self_pair(m, basis[1]) % 2 == 0;
    BaseKind kind = even ? BaseKind::S2xS2 : BaseKind::Hirzebruch;

    // fiber: primitive null class with c1.x = 2, preferring e.x = 1
    std::optional<CohClass> fiber;
    const i64 R = 8;
    for (i64 a = -R; a <= R; ++a)
        for (i64 b = -R; b <= R; ++b) {
            if (std::gcd(std::abs(a), std::abs(b)) != 1) continue;
            CohClass v = a * basis[0] + b * basis[1];
            if (self_pair(m, v) != 0 || pair(m, c1p, v) != 2) continue;
            if (!fiber || (pair(m, ep, v) == 1 && pair(m, ep, *fiber) != 1) ||
                (pair(m, ep, v) == pair(m, ep, *fiber) && v < *fiber))
                fiber = v;
        }
    if (!fiber) throw TfdError("unsupported-target", "no fiber class in blow-down target");
    CohClass twice_y = c1p - (even ? 2 : 3) * *fiber;
    CohClass y(twice_y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (twice_y[i] % 2 != 0) throw TfdError("unsupported-target", "non-integral section class");
        y[i] = twice_y[i] / 2;
    }
    i64 yy = self_pair(m, y);
    if (pair(m, *fiber, y) != 1 || yy != (even ? 0 : -1))
        throw TfdError("unsupported-target", "blow-down target is not a standard ruled lattice");

    SurfaceModel target = make_model(kind);
    auto coords = [&](const CohClass& v) {
        i64 px = pair(m, v, *fiber), py = pair(m, v, y);
        // gram^{-1}: [[0,1],[1,0]] or [[1,1],[1,0]]
        CohClass r = even ? CohClass{py, px} : CohClass{add(px, py), px};
        if (r[0] * *fiber + r[1] * y != v) throw std::logic_error("class not in blow-down complement");
        return r;
    };
    Slice r;
    r.lo = s.hi;
    r.hi = 2;
    r.model = target;
    r.omega_lo = coords(w);
    r.euler = coords(ep);
    r.pullback_basis = {*fiber, y};
    if (coords(c1p) != target.c1) throw std::logic_error("c1 not preserved by blow-down");
    return r;
}

bool positive_on_open_interval(const std::vector<Rational>& q, Rational lo, Rational hi) {
    Rational ql = eval(q, lo), qh = eval(q, hi);
    if (ql.sign() < 0 || qh.sign() < 0) return false;
    const Rational& c2 = q[2];
    if (ql.sign() == 0 && qh.sign() == 0 && c2.sign() >= 0) return false;
    if (c2.sign() > 0) {
        Rational v = -q[1] / (Rational(2) * c2);
        if (v > lo && v < hi && eval(q, v).sign() <= 0) return false;
    }
    return true;
}

bool check_interior_positive(const Slice& s) {
    auto q = s.volume_poly();
    for (int p = 2 * s.lo + 1; p < 2 * s.hi; ++p)
        if (eval(q, Rational(p, 2)).sign() <= 0) return false;
    return positive_on_open_interval(q, Rational(s.lo), Rational(s.hi));
}

bool check_volume_collapse(const Slice& s) {
    if (s.hi != 2) return false;
    auto q = s.volume_poly();
    if (eval(q, Rational(2)).sign() != 0) return false;
    return check_interior_positive(s);
}

std::optional<MaxRuling> max_side_ruling(const Slice& last) {
    const SurfaceModel& m = last.model;
    if (last.hi != 2 || m.rank() != 2 || m.base == BaseKind::P2) return std::nullopt;
    const CohClass& e = last.euler;
    int b = static_cast<int>(-self_pair(m, e));
    if (b < -1 || extremal_kind(b) != m.base) return std::nullopt;
    CohClass w2 = last.omega_at_int(2);
    if (self_pair(m, w2) != 0 || pair(m, w2, e) != 2 + b) return std::nullopt;
    CohClass x(2);
    for (std::size_t i = 0; i < 2; ++i) {
        if (w2[i] % (2 + b) != 0) return std::nullopt;
        x[i] = w2[i] / (2 + b);
    }
    CohClass y = e + static_cast<i64>(extremal_k(b)) * x;
    if (self_pair(m, x) != 0 || pair(m, x, y) != 1 || self_pair(m, y) != (b % 2 == 0 ? 0 : -1)) return std::nullopt;
    CohClass c1 = (m.base == BaseKind::S2xS2 ? 2 : 3) * x + 2 * y;
    if (c1 != m.c1) return std::nullopt;
    return MaxRuling{x, y, b};
}

const Slice& DhSequence::at_level(Rational t) const {
    for (const auto& s : slices)
        if (Rational(s.lo) <= t && t <= Rational(s.hi)) return s;
    throw std::out_of_range("level outside [-2, 2]");
}

const Slice& DhSequence::containing_zero() const { return at_level(Rational(0)); }

CohClass DhSequence::omega0() const { return containing_zero().omega_at_int(0); }

DhSequence assemble(const DhInput& in) {
    in.profile.validate();
    SurfaceModel base = make_model(extremal_kind(in.b_min));
    CohClass e = extremal_euler({in.b_min, Side::Min}, base);

    auto run = [&](const CohClass& omega_m2, bool to_top) {
        DhSequence seq;
        Slice s{-2, 2, base, omega_m2, e, {}};
        for (int level : in.profile.interior_levels) {
            if (level == 1 && !to_top) break;
            s.hi = level;
            seq.slices.push_back(s);
            if (level == -1) s = cross_blowup_wall(s, in.profile.m);
            if (level == 0) s = cross_surface_wall(s, in.z0, in.profile);
            if (level == 1) {
                if (static_cast<int>(in.cycles.size()) != in.profile.m)
                    throw TfdError("bad-profile", "vanishing-cycle count disagrees with m");
                s = cross_blowdown_wall(s, in.cycles);
            }
        }
        if (to_top) {
            s.hi = 2;
            seq.slices.push_back(s);
        } else {
            s.hi = std::max(s.lo, 0);
            seq.slices.push_back(s);
        }
        return seq;
    };

    DhSequence trial = run(base.zero(), false);
    SurfaceModel m0 = trial.model0();
    CohClass delta = m0.c1 - trial.omega0();
    for (std::size_t i = 2; i < delta.size(); ++i)
        if (delta[i] != 0) throw std::logic_error("normalization is not a pullback class");
    CohClass start{delta[0], delta[1]};
    DhSequence seq = run(start, true);
    if (seq.omega0() != seq.model0().c1) throw std::logic_error("[omega_0] != c1(M_0)");
    return seq;
}

std::vector<Slice> mirror(const std::vector<Slice>& s) {
    std::vector<Slice> r;
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
        Slice t = *it;
        t.omega_lo = it->omega_at_int(it->hi);
        t.lo = -it->hi;
        t.hi = -it->lo;
        t.euler = -it->euler;
        r.push_back(t);
    }
    return r;
}

}  // namespace tfd
