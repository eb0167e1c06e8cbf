#pragma once

#include "rsharp/classifier.hpp"
#include "rsharp/newton.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rsharp {

// a*x + b*y >= c in coordinates x = 1/p, y = 1/q.
struct HalfPlane {
    Rational a, b, c;
    std::string tag;
    bool holds(const Rational& x, const Rational& y) const { return a * x + b * y >= c; }
    bool tight(const Rational& x, const Rational& y) const { return a * x + b * y == c; }
};

struct Vertex {
    Rational x, y;
    friend bool operator==(const Vertex& l, const Vertex& r) { return l.x == r.x && l.y == r.y; }
};

struct Edge {
    int from = 0, to = 0;
    std::string tag;
};

struct RieszRegion {
    std::vector<Vertex> vertices;  // counter-clockwise from (0,0)
    std::vector<Edge> edges;
    std::vector<HalfPlane> constraints;
    bool degenerate = false;  // a segment
    bool contains(const Rational& x, const Rational& y) const;
};

// Intersection of the half-planes with the unit square.
RieszRegion polygon_from_halfplanes(std::vector<HalfPlane> hs);

RieszRegion region_factor_form(const Rational& d_h, int nu, int A, int N);
RieszRegion region_newton_form(const Rational& d, const Rational& d_R, const Rational& h);
RieszRegion excluded_region(CaseLabel label, int J);
RieszRegion region_for(const SurfaceInvariants& inv);

bool same_vertices(const RieszRegion& a, const RieszRegion& b);
bool dual_symmetric(const RieszRegion& r);  // invariant under (x, y) -> (1-y, 1-x)
bool region_contains(const RieszRegion& big, const RieszRegion& small);

struct RelevantVertex {
    Vertex v;
    std::string role;     // "first" (on q = 3p) or "second"
    std::string subcase;  // second vertex in the rectangular cases A and N
};

// Vertices with q' <= p < q. Throws ConsistencyFailure if the count is wrong for the case.
std::vector<RelevantVertex> relevant_vertices(const RieszRegion& region, const SurfaceInvariants& inv);

// First-vertex formula and second-vertex subcase formulas.
std::vector<CheckResult> vertex_checks(const RieszRegion& region, const SurfaceInvariants& inv);

struct NewtonForm {
    BivarPoly adapted;
    std::optional<Rational> shear;
    NewtonData newton;
    int o_phi = 0;  // largest multiplicity of a real irreducible factor
    Rational h;     // max(d, o)
};

NewtonForm newton_form_data(const SurfaceInvariants& inv);

struct EquivalenceResult {
    NewtonForm data;
    RieszRegion newton_region;
    RieszRegion factor_region;
    bool equal = false;
    std::vector<CheckResult> checks;
};

// Computes both formulations and compares their polygons exactly.
EquivalenceResult check_equivalence(const SurfaceInvariants& inv);

}  // namespace rsharp
