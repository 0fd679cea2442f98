#pragma once
// Delzant polytopes with a circle subgroup: fixed faces, balanced levels and
// matching against classifier records.
#include <optional>
#include <string>
#include <vector>

#include "tfd/checked.hpp"
#include "tfd/classifier.hpp"

namespace tfd {

using Point = std::vector<i64>;

struct PolyEdge {
    int a, b;
    Point dir;  // primitive, from vertex a to vertex b
    i64 length;
};

struct Facet {
    Point normal;  // primitive inward normal
    i64 offset;    // <normal, v> >= offset on the polytope
    std::vector<int> vertices;
};

struct DelzantPolytope {
    int dim = 3;
    std::vector<Point> vertices;
    std::vector<PolyEdge> edges;
    std::vector<Facet> facets;

    // edges at v with directions pointing away from v
    std::vector<std::pair<int, Point>> star(int v) const;
};

i64 lattice_length(const Point& a, const Point& b);

// Derives edges and facets, then enforces the Delzant condition. Throws TfdError("not-delzant").
DelzantPolytope make_polytope(int dim, const std::vector<Point>& vertices);

struct CircleSubgroup {
    Point xi;
    void validate(int dim) const;
};

struct FixedFace {
    std::vector<int> vertices;  // one vertex, or the two ends of an edge
    i64 raw_level;              // <xi, v>
};

std::vector<FixedFace> fixed_faces(const DelzantPolytope& p, const CircleSubgroup& s);
bool is_semifree(const DelzantPolytope& p, const CircleSubgroup& s);

struct ToricComponent {
    int level = 0;
    Shape shape = Shape::Point;
    i64 area = 0;
    std::vector<i64> weights;       // transverse weights
    std::optional<i64> selfint;     // self-intersection in the level-0 reduced space
    std::optional<i64> incidence;   // weight-one edges arriving from level -1 points
};

struct ToricFixedReport {
    Rational balanced_shift;
    std::vector<ToricComponent> components;  // sorted by level, then area
    int b_min = 0, b_max = 0;
    bool semifree = false;
    std::optional<int> b2;        // from the facet count, when a polytope is known
    std::optional<i64> c1_cubed;  // 6 * volume, when a polytope is known
};

// Throws TfdError("not-semifree") or TfdError("not-balanced-compatible").
ToricFixedReport balanced_values(const DelzantPolytope& p, const CircleSubgroup& s);
// Lattice volume of a 3-dimensional polytope, times 6.
i64 normalized_volume(const DelzantPolytope& p);

// Invariant tuple used by match_tfd; the report side is computed without the classifier.
struct MatchKey {
    std::vector<int> pattern;  // interior critical levels
    int m = 0;
    std::vector<i64> z0_areas;
    int b_min = 0, b_max = 0, b2 = 0;
    i64 c1_cubed = 0;
    std::vector<i64> z0_selfint, z0_incidence;  // empty when unknown
};
MatchKey key_of(const ToricFixedReport& r);
MatchKey key_of(const TFDRecord& r);
// The unique record whose key matches. Throws TfdError("ambiguous-match") otherwise.
std::string match_tfd(const ToricFixedReport& report, const std::vector<TFDRecord>& records);

// Fixture files: either a polytope (dim, vertices, xi) or a precomputed report.
struct Fixture {
    std::string path;
    std::optional<DelzantPolytope> polytope;
    std::optional<CircleSubgroup> xi;
    std::optional<ToricFixedReport> report;  // set directly for report fixtures
    std::optional<std::string> expect;
};
// Throws TfdError("parse") on malformed input.
Fixture parse_fixture(const std::string& text, const std::string& path = "");
Fixture load_fixture(const std::string& path);
ToricFixedReport fixture_report(const Fixture& f);

std::string describe(const ToricFixedReport& r);

}  // namespace tfd
