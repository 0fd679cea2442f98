#include "tfd/toric.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "tfd/errors.hpp"

namespace tfd {

namespace {

Point diff(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = sub(a[i], b[i]);
    return r;
}

i64 dot(const Point& a, const Point& b) {
    i64 s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = add(s, mul(a[i], b[i]));
    return s;
}

i64 content(const Point& v) {
    i64 g = 0;
    for (i64 x : v) g = std::gcd(g, std::abs(x));
    return g;
}

Point primitive(Point v) {
    i64 g = content(v);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

Point cross(const Point& a, const Point& b) {
    return {sub(mul(a[1], b[2]), mul(a[2], b[1])), sub(mul(a[2], b[0]), mul(a[0], b[2])),
            sub(mul(a[0], b[1]), mul(a[1], b[0]))};
}

i64 det(const std::vector<Point>& rows) {
    if (rows.size() == 2) return sub(mul(rows[0][0], rows[1][1]), mul(rows[0][1], rows[1][0]));
    return dot(rows[0], cross(rows[1], rows[2]));
}

std::string point_str(const Point& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

}  // namespace

i64 lattice_length(const Point& a, const Point& b) { return content(diff(b, a)); }

std::vector<std::pair<int, Point>> DelzantPolytope::star(int v) const {
    std::vector<std::pair<int, Point>> out;
    for (const auto& e : edges) {
        if (e.a == v) out.push_back({e.b, e.dir});
        if (e.b == v) {
            Point d = e.dir;
            for (auto& x : d) x = -x;
            out.push_back({e.a, d});
        }
    }
    return out;
}

DelzantPolytope make_polytope(int dim, const std::vector<Point>& vertices) {
    if (dim != 2 && dim != 3) throw TfdError("not-delzant", "dimension must be 2 or 3");
    std::size_t n = vertices.size();
    if (n < static_cast<std::size_t>(dim + 1)) throw TfdError("not-delzant", "too few vertices");
    for (const auto& v : vertices)
        if (static_cast<int>(v.size()) != dim) throw TfdError("not-delzant", "vertex of wrong dimension");
    if (std::set<Point>(vertices.begin(), vertices.end()).size() != n)
        throw TfdError("not-delzant", "repeated vertex");

    DelzantPolytope p;
    p.dim = dim;
    p.vertices = vertices;

    // supporting hyperplanes through dim affinely independent vertices
    std::map<Point, Facet> by_normal;
    auto consider = [&](Point nrm, std::size_t base) {
        if (content(nrm) == 0) return;
        nrm = primitive(nrm);
        i64 off = dot(nrm, vertices[base]);
        bool pos = false, neg = false;
        for (const auto& v : vertices) {
            i64 s = dot(nrm, v) - off;
            pos = pos || s > 0;
            neg = neg || s < 0;
        }
        if (pos && neg) return;
        if (neg) {
            for (auto& x : nrm) x = -x;
            off = -off;
        }
        if (by_normal.count(nrm)) return;
        Facet f{nrm, off, {}};
        for (std::size_t i = 0; i < n; ++i)
            if (dot(nrm, vertices[i]) == off) f.vertices.push_back(static_cast<int>(i));
        by_normal.emplace(nrm, std::move(f));
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Point d1 = diff(vertices[j], vertices[i]);
            if (dim == 2) {
                consider({-d1[1], d1[0]}, i);
                continue;
            }
            for (std::size_t k = j + 1; k < n; ++k) consider(cross(d1, diff(vertices[k], vertices[i])), i);
        }
    for (auto& [nrm, f] : by_normal) p.facets.push_back(f);

    std::vector<std::vector<int>> facets_at(n);
    for (std::size_t f = 0; f < p.facets.size(); ++f)
        for (int v : p.facets[f].vertices) facets_at[v].push_back(static_cast<int>(f));
    for (std::size_t v = 0; v < n; ++v)
        if (static_cast<int>(facets_at[v].size()) != dim)
            throw TfdError("not-delzant", "vertex " + point_str(vertices[v]) + " lies on " +
                                              std::to_string(facets_at[v].size()) + " facets");

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            int common = 0;
            for (int f : facets_at[i])
                if (std::count(facets_at[j].begin(), facets_at[j].end(), f)) ++common;
            if (common < dim - 1) continue;
            Point d = diff(vertices[j], vertices[i]);
            p.edges.push_back({static_cast<int>(i), static_cast<int>(j), primitive(d), content(d)});
        }

    for (std::size_t v = 0; v < n; ++v) {
        auto st = p.star(static_cast<int>(v));
        if (static_cast<int>(st.size()) != dim)
            throw TfdError("not-delzant", "vertex " + point_str(vertices[v]) + " has " + std::to_string(st.size()) +
                                              " edges");
        std::vector<Point> dirs;
        for (auto& [w, d] : st) dirs.push_back(d);
        if (std::abs(det(dirs)) != 1)
            throw TfdError("not-delzant", "edge directions at " + point_str(vertices[v]) + " are not a lattice basis");
    }
    return p;
}

void CircleSubgroup::validate(int dim) const {
    if (static_cast<int>(xi.size()) != dim) throw TfdError("invalid-xi", "xi has the wrong length");
    if (content(xi) != 1) throw TfdError("invalid-xi", "xi must be primitive and nonzero");
}

std::vector<FixedFace> fixed_faces(const DelzantPolytope& p, const CircleSubgroup& s) {
    s.validate(p.dim);
    std::size_t n = p.vertices.size();
    std::vector<int> comp(n, -1);
    std::vector<FixedFace> out;
    for (std::size_t v = 0; v < n; ++v) {
        if (comp[v] >= 0) continue;
        FixedFace f{{}, dot(s.xi, p.vertices[v])};
        std::vector<int> stack{static_cast<int>(v)};
        comp[v] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            f.vertices.push_back(u);
            for (auto& [w, d] : p.star(u))
                if (dot(s.xi, d) == 0 && comp[w] < 0) {
                    comp[w] = comp[v];
                    stack.push_back(w);
                }
        }
        std::sort(f.vertices.begin(), f.vertices.end());
        out.push_back(f);
    }
    return out;
}

bool is_semifree(const DelzantPolytope& p, const CircleSubgroup& s) {
    s.validate(p.dim);
    for (std::size_t v = 0; v < p.vertices.size(); ++v)
        for (auto& [w, d] : p.star(static_cast<int>(v)))
            if (std::abs(dot(s.xi, d)) > 1) return false;
    return true;
}

i64 normalized_volume(const DelzantPolytope& p) {
    if (p.dim != 3) throw TfdError("unsupported", "volume is only computed in dimension 3");
    const Point& c = p.vertices[0];
    i64 total = 0;
    for (const auto& f : p.facets) {
        // cyclic order of the facet polygon via its edges
        std::set<int> in(f.vertices.begin(), f.vertices.end());
        std::vector<int> cyc{f.vertices[0]};
        int prev = -1;
        while (cyc.size() < f.vertices.size()) {
            int cur = cyc.back(), next = -1;
            for (auto& [w, d] : p.star(cur))
                if (in.count(w) && w != prev && std::find(cyc.begin(), cyc.end(), w) == cyc.end()) {
                    next = w;
                    break;
                }
            if (next < 0) throw std::logic_error("facet is not a cycle");
            prev = cur;
            cyc.push_back(next);
        }
        i64 s = 0;
        for (std::size_t i = 1; i + 1 < cyc.size(); ++i)
            s = add(s, det({diff(p.vertices[cyc[0]], c), diff(p.vertices[cyc[i]], c), diff(p.vertices[cyc[i + 1]], c)}));
        total = add(total, std::abs(s));
    }
    return total;
}

ToricFixedReport balanced_values(const DelzantPolytope& p, const CircleSubgroup& s) {
    if (!is_semifree(p, s)) throw TfdError("not-semifree", "a weight of xi lies outside {-1, 0, 1}");
    ToricFixedReport r;
    r.semifree = true;
    auto faces = fixed_faces(p, s);
    std::optional<i64> shift;
    struct Pending {
        FixedFace face;
        ToricComponent c;
    };
    std::vector<Pending> comps;
    for (const auto& f : faces) {
        if (f.vertices.size() > 2)
            throw TfdError("unsupported", "fixed face of dimension 2 or more at level " + std::to_string(f.raw_level));
        ToricComponent c;
        c.shape = f.vertices.size() == 1 ? Shape::Point : Shape::Sphere;
        if (c.shape == Shape::Sphere) c.area = lattice_length(p.vertices[f.vertices[0]], p.vertices[f.vertices[1]]);
        i64 sigma = 0;
        for (auto& [w, d] : p.star(f.vertices[0])) {
            i64 wt = dot(s.xi, d);
            if (wt != 0) {
                c.weights.push_back(wt);
                sigma += wt;
            }
        }
        std::sort(c.weights.begin(), c.weights.end());
        i64 sh = -sigma - f.raw_level;
        if (shift && *shift != sh)
            throw TfdError("not-balanced-compatible", "fixed components disagree on the balanced shift (" +
                                                          std::to_string(*shift) + " vs " + std::to_string(sh) + ")");
        shift = sh;
        comps.push_back({f, c});
    }
    r.balanced_shift = Rational(*shift);
    for (auto& pc : comps) pc.c.level = static_cast<int>(pc.face.raw_level + *shift);

    for (auto& pc : comps) {
        if (p.dim != 3 || pc.c.shape != Shape::Sphere || pc.c.level != 0) continue;
        int a = pc.face.vertices[0], b = pc.face.vertices[1];
        Point d = diff(p.vertices[b], p.vertices[a]);
        d = primitive(d);
        // normal degrees from the two facets through the edge: g = f + k d
        i64 ksum = 0;
        for (const auto& fc : p.facets) {
            if (!std::count(fc.vertices.begin(), fc.vertices.end(), a) ||
                !std::count(fc.vertices.begin(), fc.vertices.end(), b))
                continue;
            auto other = [&](int at, int skip) {
                for (auto& [w, dir] : p.star(at))
                    if (w != skip && std::count(fc.vertices.begin(), fc.vertices.end(), w)) return dir;
                throw std::logic_error("facet without a second edge");
            };
            Point g = other(b, a), f = other(a, b);
            Point delta = diff(g, f);
            std::size_t i = 0;
            while (d[i] == 0) ++i;
            i64 k = delta[i] / d[i];
            for (std::size_t j = 0; j < d.size(); ++j)
                if (delta[j] != k * d[j]) throw std::logic_error("normal degree is not integral");
            ksum += k;
        }
        pc.c.selfint = -ksum;
        i64 inc = 0;
        for (const auto& q : comps) {
            if (q.c.shape != Shape::Point || q.c.level != -1) continue;
            int v = q.face.vertices[0];
            for (auto& [w, dir] : p.star(v))
                if (dot(s.xi, dir) == 1 && (w == a || w == b)) ++inc;
        }
        pc.c.incidence = inc;
    }

    for (auto& pc : comps) r.components.push_back(pc.c);
    std::sort(r.components.begin(), r.components.end(), [](const ToricComponent& x, const ToricComponent& y) {
        return std::tie(x.level, x.area) < std::tie(y.level, y.area);
    });
    const auto& lo = r.components.front();
    const auto& hi = r.components.back();
    if (lo.shape != Shape::Sphere || hi.shape != Shape::Sphere)
        throw TfdError("unsupported", "extremal fixed components must be spheres");
    r.b_min = static_cast<int>(lo.area - 2);
    r.b_max = static_cast<int>(hi.area - 2);
    r.b2 = static_cast<int>(p.facets.size()) - p.dim;
    if (p.dim == 3) r.c1_cubed = normalized_volume(p);
    return r;
}

MatchKey key_of(const ToricFixedReport& r) {
    MatchKey k;
    std::set<int> levels;
    int z0 = 0;
    for (const auto& c : r.components) {
        if (c.level > -2 && c.level < 2) levels.insert(c.level);
        if (c.level == -1 && c.shape == Shape::Point) ++k.m;
        if (c.level == 0) {
            ++z0;
            k.z0_areas.push_back(c.area);
            if (c.selfint) k.z0_selfint.push_back(*c.selfint);
            if (c.incidence) k.z0_incidence.push_back(*c.incidence);
        }
    }
    k.pattern.assign(levels.begin(), levels.end());
    std::sort(k.z0_areas.begin(), k.z0_areas.end());
    std::sort(k.z0_selfint.begin(), k.z0_selfint.end());
    std::sort(k.z0_incidence.begin(), k.z0_incidence.end());
    k.b_min = r.b_min;
    k.b_max = r.b_max;
    // perfect Morse-Bott count: the minimum, each index-two point and each level-0 surface
    k.b2 = r.b2 ? *r.b2 : 1 + k.m + z0;
    CriticalProfile prof;
    prof.interior_levels.insert(k.pattern.begin(), k.pattern.end());
    prof.m = k.m;
    prof.z0_components = z0;
    k.c1_cubed = chern_number(prof, r.b_min, r.b_max);
    return k;
}

MatchKey key_of(const TFDRecord& r) {
    MatchKey k;
    k.pattern.assign(r.profile.interior_levels.begin(), r.profile.interior_levels.end());
    k.m = r.profile.m;
    const SurfaceModel& m0 = r.model0;
    for (const auto& f : r.fixed) {
        if (f.level != 0) continue;
        k.z0_areas.push_back(f.area);
        k.z0_selfint.push_back(self_pair(m0, *f.pd_class));
        i64 inc = 0;
        // shared poles of E_i and Z: E_i.Z, or both poles when Z is E_i itself
        for (int i = 0; i < r.profile.m; ++i) {
            CohClass e = m0.unit(m0.first_e() + i);
            inc += e == *f.pd_class ? 2 : pair(m0, e, *f.pd_class);
        }
        k.z0_incidence.push_back(inc);
    }
    std::sort(k.z0_areas.begin(), k.z0_areas.end());
    std::sort(k.z0_selfint.begin(), k.z0_selfint.end());
    std::sort(k.z0_incidence.begin(), k.z0_incidence.end());
    k.b_min = r.b_min;
    k.b_max = r.b_max;
    k.b2 = r.b2;
    k.c1_cubed = r.c1_cubed;
    return k;
}

namespace {

bool key_matches(const MatchKey& rep, const MatchKey& rec) {
    if (rep.pattern != rec.pattern || rep.m != rec.m || rep.z0_areas != rec.z0_areas || rep.b_min != rec.b_min ||
        rep.b_max != rec.b_max || rep.b2 != rec.b2 || rep.c1_cubed != rec.c1_cubed)
        return false;
    if (rep.z0_selfint.size() == rep.z0_areas.size() && rep.z0_selfint != rec.z0_selfint) return false;
    if (rep.z0_incidence.size() == rep.z0_areas.size() && rep.z0_incidence != rec.z0_incidence) return false;
    return true;
}

// Reverses the circle: levels change sign; incidence counts refer to the other side and are dropped.
ToricFixedReport flipped(const ToricFixedReport& r) {
    ToricFixedReport f = r;
    for (auto& c : f.components) {
        c.level = -c.level;
        for (auto& w : c.weights) w = -w;
        std::sort(c.weights.begin(), c.weights.end());
        c.incidence.reset();
    }
    std::sort(f.components.begin(), f.components.end(), [](const ToricComponent& x, const ToricComponent& y) {
        return std::tie(x.level, x.area) < std::tie(y.level, y.area);
    });
    std::swap(f.b_min, f.b_max);
    return f;
}

}  // namespace

std::string match_tfd(const ToricFixedReport& report, const std::vector<TFDRecord>& records) {
    ToricFixedReport r = report.b_min > report.b_max ? flipped(report) : report;
    MatchKey k = key_of(r);
    if (r.c1_cubed && *r.c1_cubed != k.c1_cubed)
        throw TfdError("ambiguous-match", "polytope volume gives c1^3 = " + std::to_string(*r.c1_cubed) +
                                              " but localization gives " + std::to_string(k.c1_cubed));
    std::vector<std::string> hits;
    for (const auto& rec : records)
        if (key_matches(k, key_of(rec))) hits.push_back(rec.case_id);
    if (hits.size() != 1) {
        std::string msg = std::to_string(hits.size()) + " records match";
        for (const auto& h : hits) msg += " " + h;
        throw TfdError("ambiguous-match", msg);
    }
    return hits.front();
}

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> t;
    std::string w;
    while (in >> w) t.push_back(w);
    return t;
}

i64 to_int(const std::string& s, int line) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw TfdError("parse", "line " + std::to_string(line) + ": expected an integer, got '" + s + "'");
    }
}

}  // namespace

Fixture parse_fixture(const std::string& text, const std::string& path) {
    Fixture fx;
    fx.path = path;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    enum { None, Poly, Report } mode = None;
    int dim = 0;
    std::vector<Point> verts;
    ToricFixedReport rep;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        auto t = tokens(line);
        if (t.empty()) continue;
        if (t[0] == "expect:") {
            if (t.size() != 2) throw TfdError("parse", "line " + std::to_string(lineno) + ": expect needs one id");
            fx.expect = t[1];
            continue;
        }
        if (mode == None) {
            if (t[0] == "dim" && t.size() == 2) {
                dim = static_cast<int>(to_int(t[1], lineno));
                mode = Poly;
            } else if (t[0] == "report" && t.size() == 1) {
                mode = Report;
            } else {
                throw TfdError("parse", "line " + std::to_string(lineno) + ": expected 'dim d' or 'report'");
            }
            continue;
        }
        if (mode == Poly) {
            if (t[0] == "xi:") {
                Point xi;
                for (std::size_t i = 1; i < t.size(); ++i) xi.push_back(to_int(t[i], lineno));
                fx.xi = CircleSubgroup{xi};
                continue;
            }
            if (static_cast<int>(t.size()) != dim)
                throw TfdError("parse", "line " + std::to_string(lineno) + ": vertex must have " +
                                            std::to_string(dim) + " coordinates");
            Point v;
            for (const auto& w : t) v.push_back(to_int(w, lineno));
            verts.push_back(v);
            continue;
        }
        // report lines: fixed <level> <shape> [area] [selfint v] [incidence v]
        if (t[0] != "fixed" || t.size() < 3)
            throw TfdError("parse", "line " + std::to_string(lineno) + ": expected 'fixed <level> <shape> ...'");
        ToricComponent c;
        c.level = static_cast<int>(to_int(t[1], lineno));
        std::size_t i = 3;
        if (t[2] == "point") {
            c.shape = Shape::Point;
        } else if (t[2] == "sphere") {
            c.shape = Shape::Sphere;
            if (t.size() < 4) throw TfdError("parse", "line " + std::to_string(lineno) + ": sphere needs an area");
            c.area = to_int(t[3], lineno);
            i = 4;
        } else {
            throw TfdError("parse", "line " + std::to_string(lineno) + ": unknown shape '" + t[2] + "'");
        }
        for (; i < t.size(); i += 2) {
            if (i + 1 >= t.size()) throw TfdError("parse", "line " + std::to_string(lineno) + ": dangling key");
            if (t[i] == "selfint") c.selfint = to_int(t[i + 1], lineno);
            else if (t[i] == "incidence") c.incidence = to_int(t[i + 1], lineno);
            else throw TfdError("parse", "line " + std::to_string(lineno) + ": unknown key '" + t[i] + "'");
        }
        rep.components.push_back(c);
    }
    if (mode == None) throw TfdError("parse", "empty fixture");
    if (mode == Poly) {
        if (!fx.xi) throw TfdError("parse", "missing 'xi:' line");
        fx.xi->validate(dim);
        fx.polytope = make_polytope(dim, verts);
    } else {
        if (rep.components.size() < 2) throw TfdError("parse", "report needs both extremal components");
        std::sort(rep.components.begin(), rep.components.end(), [](const ToricComponent& x, const ToricComponent& y) {
            return std::tie(x.level, x.area) < std::tie(y.level, y.area);
        });
        const auto& lo = rep.components.front();
        const auto& hi = rep.components.back();
        if (lo.level != -2 || hi.level != 2 || lo.shape != Shape::Sphere || hi.shape != Shape::Sphere)
            throw TfdError("parse", "report extrema must be spheres at levels -2 and 2");
        rep.b_min = static_cast<int>(lo.area - 2);
        rep.b_max = static_cast<int>(hi.area - 2);
        rep.semifree = true;
        fx.report = rep;
    }
    return fx;
}

Fixture load_fixture(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw TfdError("parse", "cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_fixture(ss.str(), path);
}

ToricFixedReport fixture_report(const Fixture& f) {
    if (f.report) return *f.report;
    return balanced_values(*f.polytope, *f.xi);
}

std::string describe(const ToricFixedReport& r) {
    std::ostringstream o;
    o << "balanced shift " << r.balanced_shift.str() << (r.semifree ? ", semifree" : ", not semifree") << "\n";
    for (const auto& c : r.components) {
        o << "  level " << c.level << ": " << shape_name(c.shape);
        if (c.shape != Shape::Point) o << " area " << c.area;
        o << " weights";
        for (i64 w : c.weights) o << " " << w;
        if (c.selfint) o << " selfint " << *c.selfint;
        if (c.incidence) o << " incidence " << *c.incidence;
        o << "\n";
    }
    o << "  b_min " << r.b_min << ", b_max " << r.b_max;
    if (r.b2) o << ", b2 " << *r.b2;
    if (r.c1_cubed) o << ", c1^3 " << *r.c1_cubed;
    o << "\n";
    return o.str();
}

}  // namespace tfd
