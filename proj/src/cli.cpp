#include "rsharp/cli.hpp"

#include "rsharp/errors.hpp"
#include "rsharp/expr_parser.hpp"
#include "rsharp/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <new>

namespace rsharp::cli {

namespace {

using numeric::VerificationReport;
using numeric::VerifyOptions;

struct Flags {
    std::string expr;
    std::string formulation = "both";
    bool json = false, pretty = false;
    std::string condition;
    std::vector<double> grid, sigma;
    std::uint64_t samples = 1000000, seed = 1;
    int region = -1;
    bool serial = false;
    int count = 200, max_degree = 12;
    std::uint64_t corpus_seed = 7;
};

void emit(std::ostream& out, const Json& j, bool pretty) { out << (pretty ? j.dump(2) : j.dump()) << "\n"; }

std::string q(const Json& r) {
    if (r[1] == 1) return r[0].dump();
    return r[0].dump() + "/" + r[1].dump();
}

std::string vertex_text(const Json& v) {
    auto strip = [](const Json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
    std::string x = strip(v[0]) + (v[1] == 1 ? "" : "/" + strip(v[1]));
    std::string y = strip(v[2]) + (v[3] == 1 ? "" : "/" + strip(v[3]));
    return "(" + x + ", " + y + ")";
}

void print_analysis(std::ostream& out, const Json& j) {
    out << "input       " << j["input"].get<std::string>() << "\n";
    out << "polynomial  " << j["polynomial"].get<std::string>() << "\n";
    out << "case        " << j["case"].get<std::string>() << "\n";
    if (!j["weight"].is_null())
        out << "weight      kappa = (" << q(j["weight"]["kappa1"]) << ", " << q(j["weight"]["kappa2"])
            << "), d_h = " << q(j["weight"]["d_h"]) << "\n";
    const Json& in = j["invariants"];
    out << "hessian     " << j["hessian"].get<std::string>() << "\n";
    out << "invariants  d_omega = " << q(in["d_omega"]) << ", T = " << in["T"] << ", fT = "
        << in["fT"]["kind"].get<std::string>() << ", nu = " << in["nu"] << ", A = " << in["A"]
        << ", N = " << in["N"] << "\n";
    for (const auto& [name, reg] : j["region"].items()) {
        out << "region      " << name << ":";
        for (const auto& v : reg["vertices"]) out << " " << vertex_text(v);
        if (reg["degenerate"].get<bool>()) out << " (segment)";
        out << "\n";
    }
    for (const auto& v : j["vertices"]) {
        out << "vertex      " << v["role"].get<std::string>() << " (" << q(v["vertex"][0]) << ", "
            << q(v["vertex"][1]) << ")";
        if (!v["subcase"].is_null()) out << " " << v["subcase"].get<std::string>();
        out << "\n";
    }
    if (!j["equivalent"].is_null()) out << "equivalent  " << (j["equivalent"].get<bool>() ? "yes" : "NO") << "\n";
    for (const auto& c : j["checks"])
        if (!c["passed"].get<bool>()) out << "check       FAILED " << c["name"].get<std::string>() << "\n";
    for (const auto& w : j["warnings"]) out << "note        " << w.get<std::string>() << "\n";
}

Formulation parse_formulation(const std::string& s) {
    if (s == "newton") return Formulation::Newton;
    if (s == "factor") return Formulation::Factor;
    return Formulation::Both;
}

int cmd_analyze(const Flags& f, std::ostream& out) {
    Json j = analysis_report(f.expr, parse_formulation(f.formulation));
    if (f.json || f.pretty)
        emit(out, j, f.pretty);
    else
        print_analysis(out, j);
    for (const auto& c : j["checks"])
        if (!c["passed"].get<bool>()) consistency_failure("check " + c["name"].get<std::string>() + " failed");
    if (j["equivalent"] == false) consistency_failure("the two formulations disagree");
    return 0;
}

int cmd_region(const Flags& f, std::ostream& out) {
    SurfaceInvariants inv = classify(parse_polynomial(f.expr));
    RieszRegion region = region_for(inv);
    std::vector<RelevantVertex> rel;
    if (!is_excluded(inv.label)) rel = relevant_vertices(region, inv);
    Json j = region_json(region, rel);
    j["schema_version"] = kSchemaVersion;
    j["case"] = case_label_name(inv);
    if (f.json || f.pretty) {
        emit(out, j, f.pretty);
    } else {
        out << j["case"].get<std::string>() << ":";
        for (const auto& v : j["vertices"]) out << " " << vertex_text(v);
        out << "\n";
    }
    return 0;
}

int verdict_code(const std::string& v) { return v == "FAIL" ? 1 : 0; }

int cmd_verify(const Flags& f, std::ostream& out) {
    SurfaceInvariants inv = classify(parse_polynomial(f.expr));
    VerifyOptions opt;
    opt.grid = f.grid;
    opt.samples = f.samples;
    opt.seed = f.seed;
    opt.parallel = !f.serial;
    if (opt.samples == 0) throw Error(ErrorKind::InapplicableCondition, "samples must be positive");

    if (f.condition == "scaling") {
        std::vector<double> sigmas = f.sigma.empty() ? std::vector<double>{0.5, 2.0, 4.0} : f.sigma;
        VerificationReport rep = numeric::scaling_identity_check(inv, sigmas, 512, opt.parallel);
        Json j = verification_json(rep);
        j["input"] = f.expr;
        emit(out, j, f.pretty);
        return verdict_code(rep.verdict);
    }
    if (f.condition == "measure") {
        if (is_excluded(inv.label)) throw Error(ErrorKind::InapplicableCondition, "excluded surface has no level sets");
        Decomposition dec = decompose(inv);
        std::vector<int> regions;
        if (f.region >= 0) {
            if (f.region >= static_cast<int>(dec.regions.size()))
                throw Error(ErrorKind::InapplicableCondition, "no region " + std::to_string(f.region));
            regions.push_back(f.region);
        } else {
            for (const auto& r : dec.regions)
                if (Rational(r.mult) != inv.d_omega) regions.push_back(r.index);
        }
        Json reports = Json::array();
        std::string verdict = "PASS";
        for (int r : regions) {
            VerificationReport rep = numeric::measure_slope_test(inv, dec, r, opt);
            reports.push_back(verification_json(rep));
            if (rep.verdict == "FAIL") verdict = "FAIL";
        }
        Json j = {{"schema_version", kSchemaVersion}, {"input", f.expr},       {"condition", "measure"},
                  {"eps_tilde", rational_json(dec.eps_tilde)}, {"regions", reports}, {"verdict", verdict}};
        emit(out, j, f.pretty);
        return verdict_code(verdict);
    }
    auto c = numeric::parse_condition(f.condition);
    if (!c) throw Error(ErrorKind::InapplicableCondition, "unknown condition " + f.condition);
    VerificationReport rep = numeric::necessity_slope_test(inv, *c, opt);
    Json j = verification_json(rep);
    j["input"] = f.expr;
    j["case"] = case_label_name(inv);
    emit(out, j, f.pretty);
    return verdict_code(rep.verdict);
}

int cmd_corpus(const Flags& f, std::ostream& out) {
    if (f.count < 0) throw Error(ErrorKind::InapplicableCondition, "count must be nonnegative");
    if (f.max_degree < 2 || f.max_degree > BivarPoly::kDegreeCap)
        throw Error(ErrorKind::DegreeCapExceeded, "max degree must lie in [2, 64]");
    CorpusReport rep = run_corpus({f.count, f.corpus_seed, f.max_degree});
    if (f.json || f.pretty) {
        emit(out, corpus_json(rep), f.pretty);
    } else {
        out << "corpus: " << rep.passed << "/" << rep.entries.size() << " passed (seed " << f.corpus_seed
            << ", max degree " << f.max_degree << ", " << rep.seconds << " s)\n";
        for (const auto& e : rep.entries)
            if (!e.passed) {
                out << "FAIL " << e.expr << "\n";
                for (const auto& why : e.failures) out << "     " << why << "\n";
            }
    }
    return rep.ok() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Flags f;
    CLI::App app{"Riesz regions of averaging operators over mixed-homogeneous surfaces", "rsharp"};
    app.require_subcommand(1);

    auto add_output = [&](CLI::App* sub) {
        sub->add_flag("--json", f.json, "Compact JSON output");
        sub->add_flag("--pretty", f.pretty, "Indented JSON output");
    };

    auto* analyze = app.add_subcommand("analyze", "Invariants, case and region of a polynomial");
    analyze->add_option("poly", f.expr, "Polynomial in z1, z2")->required();
    analyze->add_option("--formulation", f.formulation)->check(CLI::IsMember({"newton", "factor", "both"}));
    add_output(analyze);

    auto* region = app.add_subcommand("region", "Region polygon only");
    region->add_option("poly", f.expr)->required();
    add_output(region);

    auto* verify = app.add_subcommand("verify", "Numerical checks");
    verify->add_option("poly", f.expr)->required();
    verify->add_option("--condition", f.condition, "q_ge_p, q_le_3p, scaling_line, case_nu, case_N_1overN, "
                                                   "case_N_slope, case_A_slope, scaling or measure")
        ->required();
    verify->add_option("--grid", f.grid, "Parameter grid (comma separated)")->delimiter(',');
    verify->add_option("--samples", f.samples, "Monte Carlo samples per grid point");
    verify->add_option("--seed", f.seed);
    verify->add_option("--sigma", f.sigma, "Dilations for the scaling check")->delimiter(',');
    verify->add_option("--region", f.region, "Region index for the measure check (default: all)");
    verify->add_flag("--serial", f.serial, "Use the serial kernels");
    verify->add_flag("--pretty", f.pretty);

    auto* corpus = app.add_subcommand("corpus", "Random sweep of the symbolic checks");
    corpus->add_option("--count", f.count);
    corpus->add_option("--seed", f.corpus_seed);
    corpus->add_option("--max-degree", f.max_degree);
    add_output(corpus);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(f, out);
        if (region->parsed()) return cmd_region(f, out);
        if (verify->parsed()) return cmd_verify(f, out);
        if (corpus->parsed()) return cmd_corpus(f, out);
    } catch (const Error& e) {
        err << "error: " << error_kind_name(e.kind()) << ": " << e.what() << "\n";
        return e.is_internal() ? 3 : 2;
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace rsharp::cli
