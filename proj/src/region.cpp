#include "rsharp/region.hpp"
#include "rsharp/errors.hpp"

#include <algorithm>

namespace rsharp {

namespace {

HalfPlane hp(Rational a, Rational b, Rational c, std::string tag) {
    return {std::move(a), std::move(b), std::move(c), std::move(tag)};
}

// y >= k*x - c0
HalfPlane above(const Rational& k, const Rational& c0, std::string tag) {
    return hp(-k, 1, -c0, std::move(tag));
}

std::vector<HalfPlane> base_constraints() {
    return {
        hp(1, -1, 0, "q_ge_p"),
        above(rat(1, 3), 0, "q_le_3p"),
        above(3, 2, "q_le_3p_dual"),
    };
}

std::vector<HalfPlane> box() {
    return {hp(1, 0, 0, "box"), hp(-1, 0, -1, "box"), hp(0, 1, 0, "box"), hp(0, -1, -1, "box")};
}

bool vless(const Vertex& a, const Vertex& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

Rational cross(const Vertex& o, const Vertex& a, const Vertex& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

bool RieszRegion::contains(const Rational& x, const Rational& y) const {
    for (const auto& h : constraints)
        if (!h.holds(x, y)) return false;
    return true;
}

RieszRegion polygon_from_halfplanes(std::vector<HalfPlane> hs) {
    for (auto& b : box()) hs.push_back(b);
    RieszRegion reg;
    reg.constraints = hs;
    std::vector<Vertex> pts;
    for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
            const auto &p = hs[i], &q = hs[j];
            Rational det = p.a * q.b - p.b * q.a;
            if (det == 0) continue;
            Vertex v{(p.c * q.b - p.b * q.c) / det, (p.a * q.c - p.c * q.a) / det};
            if (reg.contains(v.x, v.y)) pts.push_back(v);
        }
    std::sort(pts.begin(), pts.end(), vless);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.empty()) return reg;
    bool collinear = true;
    for (std::size_t i = 2; i < pts.size() && collinear; ++i) collinear = cross(pts[0], pts[1], pts[i]) == 0;
    if (pts.size() <= 2 || collinear) {
        reg.degenerate = true;
        reg.vertices = {pts.front()};
        if (pts.size() > 1) reg.vertices.push_back(pts.back());
    } else {
        Vertex c{0, 0};
        for (const auto& p : pts) {
            c.x += p.x;
            c.y += p.y;
        }
        c.x /= static_cast<long>(pts.size());
        c.y /= static_cast<long>(pts.size());
        auto half = [&](const Vertex& p) {
            Rational dx = p.x - c.x, dy = p.y - c.y;
            return (dy < 0 || (dy == 0 && dx < 0)) ? 1 : 0;
        };
        std::sort(pts.begin(), pts.end(), [&](const Vertex& a, const Vertex& b) {
            int ha = half(a), hb = half(b);
            if (ha != hb) return ha < hb;
            return cross(c, a, b) > 0;
        });
        std::vector<Vertex> hull;
        std::size_t n = pts.size();
        for (std::size_t i = 0; i < n; ++i)
            if (cross(pts[(i + n - 1) % n], pts[i], pts[(i + 1) % n]) != 0) hull.push_back(pts[i]);
        auto start = std::min_element(hull.begin(), hull.end(), [](const Vertex& a, const Vertex& b) {
            return a.x + a.y < b.x + b.y || (a.x + a.y == b.x + b.y && a.x < b.x);
        });
        std::rotate(hull.begin(), start, hull.end());
        reg.vertices = hull;
    }
    std::size_t n = reg.vertices.size();
    std::size_t ne = reg.degenerate ? (n > 1 ? 1 : 0) : n;
    for (std::size_t i = 0; i < ne; ++i) {
        const Vertex &a = reg.vertices[i], &b = reg.vertices[(i + 1) % n];
        std::string tag;
        for (const auto& h : reg.constraints)
            if (h.tight(a.x, a.y) && h.tight(b.x, b.y)) {
                tag = h.tag;
                break;
            }
        reg.edges.push_back({static_cast<int>(i), static_cast<int>((i + 1) % n), tag});
    }
    return reg;
}

RieszRegion region_factor_form(const Rational& d_h, int nu, int A, int N) {
    auto hs = base_constraints();
    hs.push_back(above(1, 1 / (d_h + 1), "scaling"));
    hs.push_back(above(1, rat(1, nu + 1), "nu"));
    hs.push_back(above(rat(A + 1, 2 * A + 1), rat(1, 2 * A + 1), "A"));
    hs.push_back(above(rat(2 * A + 1, A + 1), 1, "A_dual"));
    hs.push_back(above(rat(N + 1, N + 2), rat(1, N + 2), "N"));
    hs.push_back(above(rat(N + 2, N + 1), rat(2, N + 1), "N_dual"));
    if (N >= 1) hs.push_back(above(1, rat(1, N), "N_inverse"));
    return polygon_from_halfplanes(std::move(hs));
}

RieszRegion region_newton_form(const Rational& d, const Rational& d_R, const Rational& h) {
    auto hs = base_constraints();
    hs.push_back(above(1, 1 / (d + 1), "newton_distance"));
    hs.push_back(above((d_R + 1) / (2 * d_R + 1), 1 / (2 * d_R + 1), "reduced_distance"));
    hs.push_back(above((2 * d_R + 1) / (d_R + 1), 1, "reduced_distance_dual"));
    hs.push_back(above((h + 1) / (h + 2), 1 / (h + 2), "height"));
    hs.push_back(above((h + 2) / (h + 1), 2 / (h + 1), "height_dual"));
    hs.push_back(above(1, 1 / h, "height_inverse"));
    return polygon_from_halfplanes(std::move(hs));
}

RieszRegion excluded_region(CaseLabel label, int J) {
    if (label == CaseLabel::ExcludedZero)
        return polygon_from_halfplanes({hp(1, -1, 0, "q_ge_p"), hp(-1, 1, 0, "q_le_p")});
    return polygon_from_halfplanes({
        hp(1, -1, 0, "q_ge_p"),
        above(rat(1, 2), 0, "q_le_2p"),
        above(2, 1, "q_le_2p_dual"),
        above(1, rat(1, J + 1), "power"),
    });
}

RieszRegion region_for(const SurfaceInvariants& inv) {
    if (is_excluded(inv.label)) return excluded_region(inv.label, inv.excluded_power);
    return region_factor_form(inv.d_h, inv.nu, inv.A, inv.N);
}

bool same_vertices(const RieszRegion& a, const RieszRegion& b) {
    return a.degenerate == b.degenerate && a.vertices == b.vertices;
}

bool dual_symmetric(const RieszRegion& r) {
    auto sorted = r.vertices;
    std::vector<Vertex> dual;
    for (const auto& v : r.vertices) dual.push_back({1 - v.y, 1 - v.x});
    std::sort(sorted.begin(), sorted.end(), vless);
    std::sort(dual.begin(), dual.end(), vless);
    return sorted == dual;
}

bool region_contains(const RieszRegion& big, const RieszRegion& small) {
    for (const auto& v : small.vertices)
        if (!big.contains(v.x, v.y)) return false;
    return true;
}

namespace {

bool is_relevant(const Vertex& v) { return v.x > v.y && v.x + v.y <= 1; }

bool in_open_triangle(const Vertex& v) {
    return 3 * v.y > v.x && v.x + v.y < 1 && 2 * v.y < v.x;
}

std::string subcase_of(const Vertex& v, const SurfaceInvariants& inv) {
    std::string prefix = inv.label == CaseLabel::CaseA ? "A" : "N";
    if (v.x == rat(2, 3) && v.y == rat(1, 3)) return prefix + "_(2/3,1/3)";
    if (v.x + v.y == 1) return prefix + "_q=p'";
    if (v.x == 2 * v.y) {
        bool scal = v.x - v.y == 1 / (inv.d_h + 1);
        return prefix + (scal ? "_q=2p_scal" : "_q=2p_neq_scal");
    }
    if (in_open_triangle(v)) return prefix + "_Int";
    consistency_failure("second vertex outside the admissible triangle");
}

}  // namespace

std::vector<RelevantVertex> relevant_vertices(const RieszRegion& region, const SurfaceInvariants& inv) {
    std::vector<RelevantVertex> out;
    for (const auto& v : region.vertices) {
        if (!is_relevant(v)) continue;
        RelevantVertex rv{v, v.x == 3 * v.y ? "first" : "second", ""};
        out.push_back(rv);
    }
    if (is_excluded(inv.label)) return out;
    int first = 0, second = 0;
    for (auto& rv : out) {
        if (rv.role == "first") {
            ++first;
        } else {
            ++second;
            rv.subcase = subcase_of(rv.v, inv);
        }
    }
    bool two = inv.label == CaseLabel::CaseA || inv.label == CaseLabel::CaseN;
    if (first != 1 || second != (two ? 1 : 0)) consistency_failure("unexpected number of relevant vertices");
    std::stable_sort(out.begin(), out.end(),
                     [](const RelevantVertex& a, const RelevantVertex& b) { return a.role < b.role; });
    return out;
}

std::vector<CheckResult> vertex_checks(const RieszRegion& region, const SurfaceInvariants& inv) {
    std::vector<CheckResult> out;
    if (is_excluded(inv.label)) return out;
    auto rel = relevant_vertices(region, inv);
    Rational k = is_rectangular(inv.label) ? Rational(inv.T) : inv.d_omega;
    Vertex expect{3 / (k + 4), 1 / (k + 4)};
    const Vertex& got = rel.front().v;
    out.push_back({"first_vertex", true, got == expect,
                   "(" + got.x.get_str() + "," + got.y.get_str() + ")"});
    if (rel.size() < 2) return out;
    const Vertex& v2 = rel[1].v;
    const std::string& sub = rel[1].subcase;
    Rational D = inv.d_h + 1;
    Vertex e2;
    std::string expect_sub;
    if (inv.label == CaseLabel::CaseA) {
        Rational T(inv.T);
        e2 = {((2 * T + 5) - D) / (D * (T + 2)), ((T + 3) - D) / (D * (T + 2))};
        expect_sub = e2.x + e2.y == 1 ? "A_q=p'" : "A_Int";
    } else {
        Rational N(inv.N);
        if (N < D) {
            e2 = {(N + 1 - inv.d_h) / D, (N - inv.d_h) / D};
            expect_sub = e2.x + e2.y == 1 ? "N_q=p'" : "N_Int";
        } else {
            e2 = {2 / N, 1 / N};
            if (inv.N == 3)
                expect_sub = "N_(2/3,1/3)";
            else
                expect_sub = N == D ? "N_q=2p_scal" : "N_q=2p_neq_scal";
        }
    }
    out.push_back({"second_vertex", true, v2 == e2 && sub == expect_sub,
                   sub + " (" + v2.x.get_str() + "," + v2.y.get_str() + ")"});
    return out;
}

NewtonForm newton_form_data(const SurfaceInvariants& inv) {
    if (is_excluded(inv.label)) throw Error(ErrorKind::InapplicableCondition, "excluded surface has no Newton form");
    NewtonForm nf;
    Adaptation a = linearly_adapt(inv.phi);
    nf.adapted = a.adapted;
    nf.shear = a.shear;
    nf.newton = newton_data(nf.adapted);
    const auto& w = *inv.weight;
    nf.o_phi = max_irreducible_multiplicity(factor_decomposition(nf.adapted, w.r, w.s));
    nf.h = std::max(nf.newton.d, Rational(nf.o_phi));
    return nf;
}

EquivalenceResult check_equivalence(const SurfaceInvariants& inv) {
    EquivalenceResult res;
    res.data = newton_form_data(inv);
    const auto& nd = res.data.newton;
    res.newton_region = region_newton_form(nd.d, nd.d_R, res.data.h);
    res.factor_region = region_for(inv);
    res.equal = same_vertices(res.newton_region, res.factor_region);

    auto adapted_fd = factor_decomposition(res.data.adapted, inv.weight->r, inv.weight->s);
    Rational axes_max = std::max({Rational(adapted_fd.nu1), Rational(adapted_fd.nu2), inv.d_h});
    res.checks.push_back({"newton_edges", true, nd.chain.size() <= 2, std::to_string(nd.chain.size()) + " vertices"});
    res.checks.push_back({"newton_distance_axes", true, nd.d == axes_max, nd.d.get_str()});
    res.checks.push_back({"newton_distance_nu", true, nd.d == std::max(Rational(inv.nu), inv.d_h), ""});
    bool app_a = std::max(Rational(inv.A), nd.d_R) > 2 * nd.d;
    res.checks.push_back({"reduced_distance_A", app_a, !app_a || Rational(inv.A) == nd.d_R, nd.d_R.get_str()});
    bool app_n = std::max(Rational(inv.N), res.data.h) > nd.d + rat(1, 2);
    res.checks.push_back({"height_N", app_n, !app_n || Rational(inv.N) == res.data.h, res.data.h.get_str()});
    return res;
}

}  // namespace rsharp
