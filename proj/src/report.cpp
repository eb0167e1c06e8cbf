#include "rsharp/report.hpp"

#include "rsharp/errors.hpp"
#include "rsharp/expr_parser.hpp"

namespace rsharp {

namespace {

Json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

Integer integer_from_json(const Json& j) {
    if (j.is_string()) return Integer(j.get<std::string>());
    return Integer(j.get<long>());
}

Json opt_rational(const std::optional<Rational>& q) { return q ? rational_json(*q) : Json(nullptr); }

Json root_json(const RealRoot& r) {
    Json j;
    j["exact"] = r.exact;
    if (r.exact) j["value"] = rational_json(r.value);
    j["interval"] = {rational_json(r.lo), rational_json(r.hi)};
    j["approx"] = r.approx;
    j["defining"] = r.defining.format();
    return j;
}

Json weight_json(const MixedWeight& w) {
    return {{"kappa1", rational_json(w.kappa1)}, {"kappa2", rational_json(w.kappa2)}, {"r", w.r}, {"s", w.s},
            {"m", w.m},  {"d_h", rational_json(w.d_h)}};
}

Json factors_json(const FactorDecomposition& fd) {
    Json real = Json::array();
    for (const auto& f : fd.real) real.push_back({{"lambda", root_json(f.lambda)}, {"multiplicity", f.mult}});
    return {{"r", fd.r},
            {"s", fd.s},
            {"constant", rational_json(fd.constant)},
            {"nu1", fd.nu1},
            {"nu2", fd.nu2},
            {"curves", real},
            {"complex_multiplicity", fd.complex_mult_sum},
            {"max_real_multiplicity", fd.max_real_multiplicity()}};
}

const char* factor_kind_name(FactorKind k) {
    switch (k) {
        case FactorKind::AxisZ1: return "axis_z1";
        case FactorKind::AxisZ2: return "axis_z2";
        case FactorKind::Curve: return "curve";
        case FactorKind::None: break;
    }
    return "none";
}

Json invariants_json(const SurfaceInvariants& inv) {
    Json ft = {{"kind", factor_kind_name(inv.fT.kind)}, {"linear", inv.fT.linear}};
    if (inv.fT.kind == FactorKind::Curve) ft["lambda"] = root_json(inv.fT.lambda);
    return {{"d_h", rational_json(inv.d_h)}, {"d_omega", rational_json(inv.d_omega)},
            {"T", inv.T},                     {"fT", ft},
            {"nu", inv.nu},                   {"A", inv.A},
            {"N", inv.N},                     {"J", inv.J},
            {"Q", inv.Q}};
}

Json newton_json(const NewtonForm& nf) {
    Json chain = Json::array();
    for (auto [a, b] : nf.newton.chain) chain.push_back({a, b});
    return {{"adapted", nf.adapted.format()},
            {"shear", opt_rational(nf.shear)},
            {"chain", chain},
            {"d", rational_json(nf.newton.d)},
            {"d_R1", opt_rational(nf.newton.d_R1)},
            {"d_R2", opt_rational(nf.newton.d_R2)},
            {"d_R", rational_json(nf.newton.d_R)},
            {"o", nf.o_phi},
            {"h", rational_json(nf.h)}};
}

Json checks_json(const std::vector<CheckResult>& checks) {
    Json out = Json::array();
    for (const auto& c : checks)
        if (c.applicable) out.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return out;
}

Json relevant_json(const std::vector<RelevantVertex>& rel) {
    Json out = Json::array();
    for (const auto& v : rel) {
        out.push_back({{"vertex", {rational_json(v.v.x), rational_json(v.v.y)}},
                       {"role", v.role},
                       {"subcase", v.subcase.empty() ? Json(nullptr) : Json(v.subcase)}});
    }
    return out;
}

}  // namespace

Json rational_json(const Rational& q) { return Json::array({integer_json(q.get_num()), integer_json(q.get_den())}); }

Rational rational_from_json(const Json& j) {
    Rational q(integer_from_json(j.at(0)), integer_from_json(j.at(1)));
    q.canonicalize();
    return q;
}

Json region_json(const RieszRegion& region, const std::vector<RelevantVertex>& relevant) {
    Json verts = Json::array();
    for (const auto& v : region.vertices) {
        verts.push_back({integer_json(v.x.get_num()), integer_json(v.x.get_den()), integer_json(v.y.get_num()),
                         integer_json(v.y.get_den())});
    }
    Json edges = Json::array();
    for (const auto& e : region.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"condition_tag", e.tag}});
    Json subcase = nullptr;
    for (const auto& v : relevant)
        if (!v.subcase.empty()) subcase = v.subcase;
    return {{"vertices", verts},
            {"edges", edges},
            {"relevant", relevant_json(relevant)},
            {"subcase", subcase},
            {"degenerate", region.degenerate}};
}

RieszRegion region_from_json(const Json& j) {
    RieszRegion r;
    for (const auto& v : j.at("vertices")) {
        Rational x(integer_from_json(v.at(0)), integer_from_json(v.at(1)));
        Rational y(integer_from_json(v.at(2)), integer_from_json(v.at(3)));
        x.canonicalize();
        y.canonicalize();
        r.vertices.push_back({x, y});
    }
    for (const auto& e : j.at("edges"))
        r.edges.push_back({e.at("from").get<int>(), e.at("to").get<int>(), e.at("condition_tag").get<std::string>()});
    r.degenerate = j.value("degenerate", false);
    return r;
}

Json analysis_report(const std::string& input, Formulation f) {
    BivarPoly phi = parse_polynomial(input);
    SurfaceInvariants inv = classify(phi);
    Json warnings = Json::array();

    Json j;
    j["schema_version"] = kSchemaVersion;
    j["input"] = input;
    j["polynomial"] = phi.format();
    j["weight"] = inv.weight ? weight_json(*inv.weight) : Json(nullptr);
    j["hessian"] = inv.omega.format();
    j["factorization"] = {{"phi", inv.phi_factors ? factors_json(*inv.phi_factors) : Json(nullptr)},
                          {"omega", inv.omega_factors ? factors_json(*inv.omega_factors) : Json(nullptr)}};
    j["invariants"] = invariants_json(inv);
    j["case"] = case_label_name(inv);
    if (inv.adaptation_pending) warnings.push_back("heavy factor needs a shear before the case families apply");

    const RieszRegion factor = region_for(inv);
    std::vector<RelevantVertex> rel;
    std::vector<CheckResult> checks = symbolic_checks(inv);
    if (!is_excluded(inv.label)) {
        rel = relevant_vertices(factor, inv);
        auto vc = vertex_checks(factor, inv);
        checks.insert(checks.end(), vc.begin(), vc.end());
    } else {
        warnings.push_back("excluded surface: the region is the one for a vanishing Hessian");
    }

    Json regions = Json::object();
    Json equivalent = nullptr;
    j["newton"] = nullptr;
    if (f != Formulation::Newton) regions["factor"] = region_json(factor, rel);
    if (f != Formulation::Factor) {
        if (is_excluded(inv.label)) {
            regions["newton"] = region_json(factor, rel);
        } else {
            try {
                EquivalenceResult eq = check_equivalence(inv);
                j["newton"] = newton_json(eq.data);
                regions["newton"] = region_json(eq.newton_region, rel);
                checks.insert(checks.end(), eq.checks.begin(), eq.checks.end());
                if (f == Formulation::Both) equivalent = eq.equal;
                warnings.push_back("newton form takes N = h(phi), the height, in its last constraint");
            } catch (const Error& e) {
                if (e.is_internal()) throw;
                warnings.push_back(std::string("newton form unavailable: ") + e.what());
            }
        }
    }
    j["region"] = regions;
    j["equivalent"] = equivalent;
    j["vertices"] = relevant_json(rel);
    j["checks"] = checks_json(checks);
    j["warnings"] = warnings;
    return j;
}

Json verification_json(const numeric::VerificationReport& rep) {
    Json est = Json::array();
    for (const auto& e : rep.estimates) est.push_back({{"param", e.param}, {"value", e.value}, {"stderr", e.stderr_}});
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["condition"] = rep.condition;
    j["grid"] = rep.grid;
    j["estimates"] = est;
    j["slope"] = rep.fit ? Json(rep.fit->slope) : Json(nullptr);
    j["fit_rms"] = rep.fit ? Json(rep.fit->residual) : Json(nullptr);
    j["predicted"] = rep.predicted;
    j["tolerance"] = rep.tolerance;
    j["verdict"] = rep.verdict;
    j["seed"] = rep.seed;
    j["samples"] = rep.samples;
    j["detail"] = rep.detail;
    return j;
}

Json corpus_json(const CorpusReport& rep) {
    Json failures = Json::array();
    for (const auto& e : rep.entries)
        if (!e.passed) failures.push_back({{"polynomial", e.expr}, {"case", e.label}, {"failures", e.failures}});
    Json labels = Json::object();
    for (const auto& e : rep.entries)
        if (!e.label.empty()) labels[e.label] = labels.value(e.label, 0) + 1;
    return {{"schema_version", kSchemaVersion},
            {"count", rep.options.count},
            {"seed", rep.options.seed},
            {"max_degree", rep.options.max_degree},
            {"passed", rep.passed},
            {"failed", rep.failed},
            {"cases", labels},
            {"failures", failures},
            {"seconds", rep.seconds}};
}

}  // namespace rsharp
