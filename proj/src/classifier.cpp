#include "tfd/classifier.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tfd/exceptional.hpp"

namespace tfd {

namespace {

// Search box for the unknown coefficients (a, b, c, d, k).
constexpr int kBoxLo = -4;
constexpr int kBoxHi = 6;

SliceSummary summarize(const Slice& s) {
    return {s.lo, s.hi, s.model.name(), format_class(s.model, s.omega_lo), format_class(s.model, s.euler)};
}

std::string join_classes(const SurfaceModel& m, const std::vector<CohClass>& cs) {
    std::string out = "{";
    for (std::size_t i = 0; i < cs.size(); ++i) out += (i ? "," : "") + format_class(m, cs[i]);
    return out + "}";
}

CriticalProfile make_profile(int m, int z0) {
    CriticalProfile p;
    p.m = m;
    p.z0_components = z0;
    if (m > 0) p.interior_levels.insert({-1, 1});
    if (z0 > 0) p.interior_levels.insert(0);
    return p;
}

struct DhResult {
    DhSequence seq;
    int b_max;
};

// DH assembly plus all boundary checks; throws TfdError with a reason code.
DhResult run_dh(int b_min, const CriticalProfile& p, const std::vector<CohClass>& z0,
                const std::vector<CohClass>& cycles) {
    DhSequence seq = assemble({b_min, p, z0, cycles});
    for (const auto& s : seq.slices)
        if (s.lo < s.hi && !check_interior_positive(s))
            throw TfdError("volume-positivity", "[omega_t]^2 not positive on (" + std::to_string(s.lo) + "," +
                                                    std::to_string(s.hi) + ")");
    if (!check_volume_collapse(seq.slices.back())) throw TfdError("no-collapse", "[omega_t]^2 does not vanish at t=2");
    const Slice& first = seq.slices.front();
    CohClass wm2 = first.omega_lo;
    if (b_min < -1 || self_pair(first.model, wm2) != 0 || pair(first.model, wm2, first.euler) != -(2 + b_min))
        throw TfdError("min-side", "minimum data inconsistent with b_min = " + std::to_string(b_min));
    auto ruling = max_side_ruling(seq.slices.back());
    if (!ruling) throw TfdError("max-side", "e(P_2^-) is not the Euler class of a ruled end");
    return {seq, ruling->b_max};
}

std::vector<FixedComponent> make_fixed(const DhSequence& seq, int b_min, int b_max, const CriticalProfile& p,
                                       const std::vector<SplitPart>& z0) {
    std::vector<FixedComponent> out;
    out.push_back({-2, Shape::Sphere, 0, std::nullopt, 2 + b_min, std::nullopt});
    for (int i = 0; i < p.m; ++i) out.push_back({-1, Shape::Point, 0, std::nullopt, 0, std::nullopt});
    if (!z0.empty()) {
        const Slice& below = seq.containing_zero();
        const Slice& above = seq.at_level(Rational(1, 2));
        for (const auto& part : z0) {
            i64 bm = -pair(below.model, below.euler, part.pd_class);
            i64 bp = pair(above.model, above.euler, part.pd_class);
            out.push_back({0, part.genus == 0 ? Shape::Sphere : Shape::Torus, part.genus, part.pd_class, part.area,
                           std::pair<i64, i64>{bm, bp}});
        }
    }
    for (int i = 0; i < p.m; ++i) out.push_back({1, Shape::Point, 0, std::nullopt, 0, std::nullopt});
    out.push_back({2, Shape::Sphere, 0, std::nullopt, 2 + b_max, std::nullopt});
    return out;
}

// Sub-case numbering of the published table, keyed by the canonical level-0 classes.
const std::map<std::string, std::vector<std::string>>& published_order() {
    static const std::map<std::string, std::vector<std::string>> t = {
        {"II-1", {"{x+y}", "{x}", "{y,y}"}},
        {"II-2", {"{x+y,y}", "{2x+2y}"}},
        {"IV-1-1", {"{x+y-E1-E2,x-E1}", "{x+y-E1-E2,y}", "{x+y-E1}"}},
        {"IV-2-1", {"{2x+y-E1}", "{x+y-E1,x+y-E1}"}},
        {"IV-2-2", {"{x+y}", "{x+y-E1,y}"}},
    };
    return t;
}

const std::map<std::string, std::string>& mori_mukai() {
    static const std::map<std::string, std::string> t = {
        {"I-1", "1-17"},     {"II-1.1", "2-32"},   {"II-1.2", "2-35"},   {"II-1.3", "3-27"},
        {"II-2.1", "3-28"},  {"II-2.2", "2-29"},   {"III.1", "2-33"},    {"III.2", "3-25"},
        {"III.3", "4-6"},    {"IV-1-1.1", "5-2"},  {"IV-1-1.2", "5-3"},  {"IV-1-1.3", "4-7"},
        {"IV-1-2", "4-9"},   {"IV-2-1.1", "3-20"}, {"IV-2-1.2", "4-8"},  {"IV-2-2.1", "3-24"},
        {"IV-2-2.2", "4-10"}, {"IV-2-3", "3-26"},  {"IV-2-4", "3-29"},   {"IV-2-5", "4-12"},
        {"IV-2-6", "3-30"},
    };
    return t;
}

std::string z0_key(const TFDRecord& r) {
    std::vector<std::string> s;
    for (const auto& c : r.z0_classes()) s.push_back(format_class(r.model0, c));
    std::sort(s.begin(), s.end());
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i];
    return out + "}";
}

// Numbers the records of one group: published order first, then any others.
void assign_ids(std::vector<TFDRecord>& recs, const std::string& group, const std::string& sep) {
    if (recs.size() == 1) {
        recs[0].group = group;
        recs[0].case_id = group;
    } else {
        std::vector<std::string> order;
        auto it = published_order().find(group);
        if (it != published_order().end()) order = it->second;
        std::stable_sort(recs.begin(), recs.end(), [&](const TFDRecord& a, const TFDRecord& b) {
            auto pa = std::find(order.begin(), order.end(), z0_key(a)) - order.begin();
            auto pb = std::find(order.begin(), order.end(), z0_key(b)) - order.begin();
            return pa < pb;
        });
        for (std::size_t i = 0; i < recs.size(); ++i) {
            recs[i].group = group;
            recs[i].case_id = group + sep + std::to_string(i + 1);
        }
    }
    for (auto& r : recs) {
        auto mm = mori_mukai().find(r.case_id);
        r.annotation = mm == mori_mukai().end() ? "" : "Mori-Mukai " + mm->second;
    }
}

void add_unique(std::vector<TFDRecord>& out, TFDRecord r) {
    for (const auto& o : out)
        if (same_tfd(o, r)) return;
    out.push_back(std::move(r));
}

bool on_boundary(int v) { return v == kBoxLo || v == kBoxHi; }

// Emits one record per splitting of `total`; returns how many survived.
int emit_splittings(int b_min, int m, const CohClass& total, i64 vol, const std::vector<CohClass>& cycles,
                    std::vector<TFDRecord>& out, std::string& status, std::vector<SplittingInstance>& log) {
    SurfaceModel m0 = make_model(extremal_kind(b_min), m);
    log.push_back({m0, total, vol});
    auto splits = enumerate_splittings(m0, m0.c1, total, vol);
    if (splits.empty()) {
        status = "adjunction infeasible";
        return 0;
    }
    int n = 0;
    std::string last_err;
    for (const auto& s : splits) {
        try {
            TFDRecord r = canonicalize(build_record(b_min, make_profile(m, static_cast<int>(s.parts.size())), s.parts,
                                                    cycles));
            add_unique(out, std::move(r));
            ++n;
        } catch (const TfdError& e) {
            last_err = e.code();
        }
    }
    status = n > 0 ? "accepted" : "splitting rejected (" + last_err + ")";
    return n;
}

void check_box(const std::map<std::string, int>& unknowns) {
    for (auto [k, v] : unknowns)
        if (on_boundary(v)) throw std::logic_error("accepted solution touches the search box boundary: " + k);
}

std::string dh_reason(const TfdError& e) {
    const std::string& c = e.code();
    if (c == "second-vanishing-class") return "second vanishing class";
    if (c == "volume-positivity") return "volume positivity";
    if (c == "no-collapse") return "no volume collapse";
    if (c == "max-side") return "max-side ruling/parity";
    if (c == "min-side") return "min-side inconsistency";
    return c;
}

}  // namespace

std::vector<CohClass> TFDRecord::z0_classes() const {
    std::vector<CohClass> out;
    for (const auto& f : fixed)
        if (f.level == 0 && f.pd_class) out.push_back(*f.pd_class);
    return out;
}

i64 TFDRecord::vol_z0() const {
    i64 v = 0;
    for (const auto& f : fixed)
        if (f.level == 0) v += f.area;
    return v;
}

TFDRecord build_record(int b_min, const CriticalProfile& p, const std::vector<SplitPart>& z0,
                       const std::vector<CohClass>& cycles) {
    std::vector<CohClass> classes;
    for (const auto& part : z0) classes.push_back(part.pd_class);
    DhResult dh = run_dh(b_min, p, classes, cycles);
    TFDRecord r;
    r.profile = p;
    r.model0 = dh.seq.model0();
    r.omega0 = dh.seq.omega0();
    r.euler_minus2_plus = dh.seq.euler_minus2_plus();
    r.b_min = b_min;
    r.b_max = dh.b_max;
    std::vector<SplitPart> parts = z0;
    for (auto& part : parts) {
        part.area = pair(r.model0, r.omega0, part.pd_class);
        part.genus = adjunction_genus(r.model0, part.pd_class);
        if (part.area < 1 || part.genus < 0) throw TfdError("invalid-component", "level-0 part fails adjunction");
        if (part.genus > 0) throw TfdError("positive-genus", "level-0 part of genus " + std::to_string(part.genus));
    }
    sort_parts(parts);
    r.fixed = make_fixed(dh.seq, b_min, dh.b_max, p, parts);
    r.cycles = cycles;
    std::sort(r.cycles.begin(), r.cycles.end());
    r.b2 = betti2(p);
    r.c1_cubed = chern_number(p, b_min, dh.b_max);
    for (const auto& s : dh.seq.slices) r.slices.push_back(summarize(s));
    return r;
}

DhSequence replay(const TFDRecord& r) {
    return run_dh(r.b_min, r.profile, r.z0_classes(), r.cycles).seq;
}

TFDRecord reverse_record(const TFDRecord& r) {
    DhSequence seq = replay(r);
    const Slice& last = seq.slices.back();
    auto ruling = max_side_ruling(last);
    if (!ruling) throw TfdError("max-side", "no ruling at the maximum");
    const SurfaceModel& m0 = r.model0;
    auto lift = [&](const CohClass& v) {
        if (last.pullback_basis.empty()) return v;
        return v[0] * last.pullback_basis[0] + v[1] * last.pullback_basis[1];
    };
    CohClass x = lift(ruling->fiber), y = lift(ruling->section);
    bool even = ruling->b_max % 2 == 0;
    // coordinates in the basis (x, y, C_1, ..., C_m)
    auto coords = [&](const CohClass& v) {
        CohClass out(m0.rank());
        CohClass w = v;
        for (std::size_t i = 0; i < r.cycles.size(); ++i) {
            i64 g = -pair(m0, v, r.cycles[i]);
            out[2 + i] = g;
            w -= g * r.cycles[i];
        }
        i64 px = pair(m0, w, x), py = pair(m0, w, y);
        out[0] = even ? py : add(px, py);
        out[1] = px;
        CohClass back = out[0] * x + out[1] * y;
        for (std::size_t i = 0; i < r.cycles.size(); ++i) back += out[2 + i] * r.cycles[i];
        if (back != v) throw std::logic_error("reversal basis does not span");
        return out;
    };
    SurfaceModel m0r = make_model(extremal_kind(r.b_max), r.profile.m);
    if (coords(m0.c1) != m0r.c1) throw std::logic_error("reversal does not preserve c1");
    std::vector<SplitPart> z0;
    for (const auto& z : r.z0_classes()) z0.push_back({coords(z), 0, 0});
    std::vector<CohClass> cycles;
    for (int i = 0; i < r.profile.m; ++i) cycles.push_back(coords(m0.unit(m0.first_e() + i)));
    TFDRecord out = build_record(r.b_max, r.profile, z0, cycles);
    if (out.b_max != r.b_min) throw std::logic_error("reversal does not swap b_min and b_max");
    out.case_id = r.case_id;
    out.group = r.group;
    out.annotation = r.annotation;
    return out;
}

TFDRecord canonicalize(const TFDRecord& in) {
    TFDRecord r = in.b_min > in.b_max ? reverse_record(in) : in;
    const SurfaceModel& m0 = r.model0;
    std::size_t e0 = m0.first_e(), k = m0.rank() - e0;
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    auto permute = [&](const CohClass& c) {
        CohClass out = c;
        for (std::size_t i = 0; i < k; ++i) out[e0 + perm[i]] = c[e0 + i];
        return out;
    };
    std::vector<SplitPart> best_parts;
    std::vector<CohClass> best_cycles;
    bool first = true;
    do {
        std::vector<SplitPart> parts;
        for (const auto& f : r.fixed)
            if (f.level == 0) parts.push_back({permute(*f.pd_class), f.genus, f.area});
        sort_parts(parts);
        std::vector<CohClass> cycles;
        for (const auto& c : r.cycles) cycles.push_back(permute(c));
        std::sort(cycles.begin(), cycles.end());
        auto key = [](const std::vector<SplitPart>& ps) {
            std::vector<CohClass> v;
            for (const auto& p : ps) v.push_back(p.pd_class);
            return v;
        };
        if (first || key(parts) < key(best_parts) || (key(parts) == key(best_parts) && cycles < best_cycles)) {
            best_parts = parts;
            best_cycles = cycles;
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    TFDRecord out = build_record(r.b_min, r.profile, best_parts, best_cycles);
    out.case_id = in.case_id;
    out.group = in.group;
    out.annotation = in.annotation;
    return out;
}

bool same_tfd(const TFDRecord& a, const TFDRecord& b) {
    if (!(a.profile == b.profile) || !(a.model0 == b.model0) || a.b_min != b.b_min || a.b_max != b.b_max ||
        a.euler_minus2_plus != b.euler_minus2_plus || a.cycles != b.cycles)
        return false;
    auto za = a.z0_classes(), zb = b.z0_classes();
    std::sort(za.begin(), za.end());
    std::sort(zb.begin(), zb.end());
    return za == zb;
}

void check_record(const TFDRecord& r) {
    auto fail = [&](const std::string& what) { throw std::logic_error(r.case_id + ": " + what); };
    validate_model(r.model0);
    if (r.omega0 != r.model0.c1) fail("omega0 != c1(M_0)");
    if (r.b_min > r.b_max) fail("orientation not normalized");
    if (r.b2 != betti2(r.profile)) fail("b2 mismatch");
    if (r.c1_cubed != chern_number(r.profile, r.b_min, r.b_max)) fail("c1^3 mismatch");
    i64 sum = 0;
    for (const auto& f : r.fixed) sum += contribution_c13(f);
    if (sum != r.c1_cubed) fail("c1^3 differs from the per-component sum");
    if (chern_number_series(r.fixed) != r.c1_cubed) fail("c1^3 differs from the residue computation");
    if (!identity_int_c1(r.profile, r.b_min, r.b_max, static_cast<int>(r.vol_z0()))) fail("int c1 identity fails");
    if (r.profile.z0_components == 0 && !identity_int_one(r.b_min, r.b_max)) fail("int 1 identity fails");
    if (!integrate(r.fixed, 0).empty()) fail("int 1 residue does not vanish");
    if (!integrate(r.fixed, 1).empty()) fail("int c1 residue does not vanish");
    auto z = r.z0_classes();
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (adjunction_genus(r.model0, z[i]) != 0) fail("level-0 component is not a sphere");
        for (std::size_t j = i + 1; j < z.size(); ++j)
            if (pair(r.model0, z[i], z[j]) != 0) fail("level-0 components intersect");
    }
    DhSequence seq = replay(r);
    if (seq.omega0() != r.omega0 || seq.euler_minus2_plus() != r.euler_minus2_plus) fail("replay mismatch");
    std::vector<SliceSummary> again;
    for (const auto& s : seq.slices) again.push_back(summarize(s));
    if (again != r.slices) fail("replay slice mismatch");
    const Slice& last = seq.slices.back();
    if (self_pair(last.model, last.euler) != -r.b_max) fail("e(P_2^-)^2 != -b_max");
    if (!check_volume_collapse(last)) fail("no volume collapse at the maximum");
}

ClassifierReport classify_case_I() {
    ClassifierReport rep;
    for (BaseKind kind : {BaseKind::S2xS2, BaseKind::Hirzebruch}) {
        std::string branch = kind == BaseKind::S2xS2 ? "S2xS2" : "Hirzebruch";
        auto b_of = [&](int k) { return kind == BaseKind::S2xS2 ? 2 * k : 2 * k + 1; };
        // [omega_2]^2 is at most quadratic in k; interpolate it to locate rational roots
        auto f = [&](int k) {
            DhSequence seq = assemble({b_of(k), make_profile(0, 0), {}, {}});
            const Slice& last = seq.slices.back();
            return self_pair(last.model, last.omega_at_int(2));
        };
        i64 f0 = f(0), f1 = f(1), f2 = f(2);
        i64 c2x2 = f2 - 2 * f1 + f0;  // twice the leading coefficient
        if (c2x2 == 0 && f1 != f0) {
            Rational root = Rational(-f0) / Rational(f1 - f0);
            if (!root.is_integer()) rep.outcomes.push_back({"I", branch, {}, "non-integral k (k = " + root.str() + ")"});
        } else if (c2x2 == 0 && f0 != 0) {
            rep.outcomes.push_back({"I", branch, {}, "no solution of [omega_2]^2 = 0"});
        }
        for (int k = kBoxLo; k <= kBoxHi; ++k) {
            if (f(k) != 0) continue;
            std::map<std::string, int> u{{"k", k}};
            try {
                TFDRecord r = build_record(b_of(k), make_profile(0, 0), {}, {});
                if (r.b_min > r.b_max) {
                    rep.outcomes.push_back({"I", branch, u, "orientation normalization"});
                    continue;
                }
                check_box(u);
                rep.outcomes.push_back({"I", branch, u, "accepted"});
                add_unique(rep.records, canonicalize(r));
            } catch (const TfdError& e) {
                rep.outcomes.push_back({"I", branch, u, dh_reason(e)});
            }
        }
    }
    assign_ids(rep.records, "I-1", "");
    return rep;
}

ClassifierReport classify_case_II() {
    ClassifierReport rep;
    std::vector<TFDRecord> groups[2];
    for (BaseKind kind : {BaseKind::S2xS2, BaseKind::Hirzebruch}) {
        std::string branch = kind == BaseKind::S2xS2 ? "S2xS2" : "Hirzebruch";
        auto& out = groups[kind == BaseKind::S2xS2 ? 0 : 1];
        for (int k = kBoxLo; k <= kBoxHi; ++k) {
            int b_min = kind == BaseKind::S2xS2 ? 2 * k : 2 * k + 1;
            if (b_min < -1) continue;
            SurfaceModel m0 = make_model(kind);
            for (int a = kBoxLo; a <= kBoxHi; ++a)
                for (int b = kBoxLo; b <= kBoxHi; ++b) {
                    CohClass total{a, b};
                    i64 vol = pair(m0, m0.c1, total);
                    if (vol < 1) continue;
                    std::map<std::string, int> u{{"a", a}, {"b", b}, {"k", k}};
                    DhSequence seq = assemble({b_min, make_profile(0, 1), {total}, {}});
                    const Slice& last = seq.slices.back();
                    // the collapse equation cuts out the solution set
                    if (self_pair(last.model, last.omega_at_int(2)) != 0) continue;
                    int b_max;
                    try {
                        b_max = run_dh(b_min, make_profile(0, 1), {total}, {}).b_max;
                    } catch (const TfdError& e) {
                        rep.outcomes.push_back({"II", branch, u, dh_reason(e)});
                        continue;
                    }
                    if (b_min > b_max) {
                        rep.outcomes.push_back({"II", branch, u, "orientation normalization"});
                        continue;
                    }
                    std::string status;
                    if (emit_splittings(b_min, 0, total, vol, {}, out, status, rep.splitting_instances) > 0) check_box(u);
                    rep.outcomes.push_back({"II", branch, u, status});
                }
        }
    }
    assign_ids(groups[0], "II-1", ".");
    assign_ids(groups[1], "II-2", ".");
    for (auto& g : groups)
        for (auto& r : g) rep.records.push_back(r);
    return rep;
}

namespace {

// e on (-1, 0): the extremal class pulled back, plus the new exceptional divisors
CohClass euler_below_zero(int b_min, const SurfaceModel& m0, int m) {
    SurfaceModel base = make_model(extremal_kind(b_min));
    CohClass e = pullback(extremal_euler({b_min, Side::Min}, base), m0.rank());
    for (int i = 0; i < m; ++i) e[m0.first_e() + i] = 1;
    return e;
}

std::vector<CohClass> zero_area_classes(const SurfaceModel& m0, const CohClass& omega1) {
    std::vector<CohClass> out;
    for (const auto& e : exceptional_classes(m0))
        if (pair(m0, omega1, e) == 0) out.push_back(e);
    return out;
}

}  // namespace

ClassifierReport classify_case_III() {
    ClassifierReport rep;
    std::vector<TFDRecord> out;
    for (int m = 1; m <= 8; ++m)
        for (int b = -1; b <= 6; ++b) {
            CriticalProfile p = make_profile(m, 0);
            // without level-0 surfaces the localization identities force b_max = b_min
            if (!identity_int_one(b, b) || !identity_int_c1(p, b, b, 0)) continue;
            std::map<std::string, int> u{{"b_min", b}, {"m", m}};
            SurfaceModel m0 = make_model(extremal_kind(b), m);
            CohClass omega1 = m0.c1 - euler_below_zero(b, m0, m);
            auto cycles = zero_area_classes(m0, omega1);
            std::string branch = "m=" + std::to_string(m) + " C=" + join_classes(m0, cycles);
            if (static_cast<int>(cycles.size()) != m) {
                rep.outcomes.push_back({"III", branch, u,
                                        cycles.size() > static_cast<std::size_t>(m) ? "second vanishing class"
                                                                                    : "too few vanishing cycles"});
                continue;
            }
            try {
                TFDRecord r = build_record(b, p, {}, cycles);
                if (r.b_max != b) {
                    rep.outcomes.push_back({"III", branch, u, "b_max mismatch"});
                    continue;
                }
                check_box(u);
                add_unique(out, canonicalize(r));
                rep.outcomes.push_back({"III", branch, u, "accepted"});
            } catch (const TfdError& e) {
                rep.outcomes.push_back({"III", branch, u, dh_reason(e)});
            }
        }
    assign_ids(out, "III", ".");
    rep.records = out;
    return rep;
}

ClassifierReport classify_case_IV() {
    ClassifierReport rep;
    auto sols = enumerate_profile_solutions(true);
    std::map<int, std::vector<ProfileSolution>> by_m;
    for (const auto& s : sols) by_m[s.m].push_back(s);
    for (auto& [m, v] : by_m)
        std::sort(v.begin(), v.end(), [](const ProfileSolution& a, const ProfileSolution& b) {
            return a.b_min != b.b_min ? a.b_min < b.b_min : a.vol > b.vol;
        });
    int max_m = by_m.empty() ? 0 : by_m.rbegin()->first;
    for (auto it = by_m.rbegin(); it != by_m.rend(); ++it) {
        int m = it->first;
        std::string mgroup = "IV-" + std::to_string(max_m - m + 1);
        int j = 0;
        for (const auto& sol : it->second) {
            ++j;
            std::string group = mgroup + "-" + std::to_string(j);
            std::vector<TFDRecord> out;
            CriticalProfile p = make_profile(m, 1);
            SurfaceModel m0 = make_model(extremal_kind(sol.b_min), m);
            if (m0.rank() > 9) continue;
            CohClass em = euler_below_zero(sol.b_min, m0, m);
            auto exc = exceptional_classes(m0);
            // pairwise orthogonal m-subsets of exceptional classes
            std::vector<std::vector<CohClass>> subsets;
            std::vector<CohClass> cur;
            auto pick = [&](auto&& self, std::size_t start) -> void {
                if (static_cast<int>(cur.size()) == m) {
                    subsets.push_back(cur);
                    return;
                }
                for (std::size_t i = start; i < exc.size(); ++i) {
                    bool ok = true;
                    for (const auto& c : cur) ok = ok && pair(m0, c, exc[i]) == 0;
                    if (!ok) continue;
                    cur.push_back(exc[i]);
                    self(self, i + 1);
                    cur.pop_back();
                }
            };
            pick(pick, 0);
            for (const auto& cycles : subsets) {
                std::string branch = "m=" + std::to_string(m) + " vol=" + std::to_string(sol.vol) + " b=(" +
                                     std::to_string(sol.b_min) + "," + std::to_string(sol.b_max) +
                                     ") C=" + join_classes(m0, cycles);
                std::size_t n = m0.rank();
                CohClass z(n);
                for (std::size_t i = 0; i < n; ++i) z[i] = kBoxLo;
                while (true) {
                    CohClass ep = em + z;
                    CohClass omega1 = m0.c1 - ep;
                    bool solves = pair(m0, m0.c1, z) == sol.vol && self_pair(m0, ep) == -sol.b_max - m;
                    for (const auto& c : cycles) solves = solves && pair(m0, omega1, c) == 0;
                    if (solves) {
                        std::map<std::string, int> u;
                        for (std::size_t i = 0; i < n; ++i) u[std::string(1, static_cast<char>('a' + i))] = static_cast<int>(z[i]);
                        std::string status;
                        try {
                            int b_max = run_dh(sol.b_min, p, {z}, cycles).b_max;
                            if (b_max != sol.b_max) {
                                status = "b_max mismatch";
                            } else if (emit_splittings(sol.b_min, m, z, sol.vol, cycles, out, status, rep.splitting_instances) > 0) {
                                check_box(u);
                            }
                        } catch (const TfdError& e) {
                            status = dh_reason(e);
                        }
                        rep.outcomes.push_back({"IV", branch, u, status});
                    }
                    std::size_t i = 0;
                    while (i < n && z[i] == kBoxHi) z[i] = kBoxLo, ++i;
                    if (i == n) break;
                    ++z[i];
                }
            }
            assign_ids(out, group, ".");
            for (auto& r : out) rep.records.push_back(r);
        }
    }
    return rep;
}

ClassifierReport classify_all_report() {
    ClassifierReport all;
    for (auto f : {classify_case_I, classify_case_II, classify_case_III, classify_case_IV}) {
        ClassifierReport r = f();
        all.records.insert(all.records.end(), r.records.begin(), r.records.end());
        all.outcomes.insert(all.outcomes.end(), r.outcomes.begin(), r.outcomes.end());
        all.splitting_instances.insert(all.splitting_instances.end(), r.splitting_instances.begin(),
                                       r.splitting_instances.end());
    }
    std::sort(all.records.begin(), all.records.end(),
              [](const TFDRecord& a, const TFDRecord& b) { return a.case_id < b.case_id; });
    return all;
}

std::vector<TFDRecord> classify_all() { return classify_all_report().records; }

std::vector<TFDRecord> classify_case(const std::string& which) {
    if (which == "all") return classify_all();
    if (which == "I") return classify_case_I().records;
    if (which == "II") return classify_case_II().records;
    if (which == "III") return classify_case_III().records;
    if (which == "IV") return classify_case_IV().records;
    throw TfdError("usage", "unknown case " + which);
}

}  // namespace tfd
