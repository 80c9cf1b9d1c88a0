#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gkt/adjoint.hpp"
#include "gkt/errors.hpp"
#include "gkt/generators.hpp"
#include "gkt/grid_io.hpp"
#include "gkt/json_io.hpp"
#include "gkt/ks_space.hpp"
#include "gkt/random.hpp"
#include "gkt/schatten.hpp"
#include "gkt/semigroup.hpp"
#include "gkt/spectral.hpp"
#include "gkt/suite.hpp"

namespace {

using nlohmann::json;
using namespace gkt;

constexpr int kPass = 0;
constexpr int kAssertionFailure = 1;
constexpr int kInputError = 2;
constexpr int kNumericalError = 3;

struct RunConfig {
    std::string input;
    std::string builtin;
    int n = 0;
    double half_width = 4.0;
    int m = 1025;
    int k = 512;
    std::string model = "l2";
    double p = 2.0;
    int samples = 100;
    double slack = 1.0;
    std::uint64_t seed = 1;
    double tol = 1e-10;
    std::string out;
    std::string criteria;
    std::string check;
    std::string mode = "both";
    std::string g = "identity";
    std::string action = "decompose";
    std::string x;
};

void add_common(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--input", cfg.input, "Input file (CSV or JSON)");
    cmd->add_option("--builtin", cfg.builtin, "Builtin generator");
    cmd->add_option("--seed", cfg.seed, "Random seed");
    cmd->add_option("--tol", cfg.tol, "Assertion tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--out", cfg.out, "Write the JSON report here instead of stdout");
}

void add_operator_options(CLI::App* cmd, RunConfig& cfg) {
    add_common(cmd, cfg);
    cmd->add_option("--n", cfg.n, "Dimension for sized builtins")->check(CLI::Range(1, 4096));
    cmd->add_option("--model", cfg.model, "Banach model: l1, l2, sup or lp:<p>");
    cmd->add_option("--samples", cfg.samples, "Sample count")->check(CLI::Range(1, 10000000));
}

OperatorOnB load_op(const RunConfig& cfg) {
    if (!cfg.input.empty() && !cfg.builtin.empty()) throw InvalidArgument("give either --input or --builtin, not both");
    if (!cfg.input.empty()) return io::load_operator(cfg.input);
    if (cfg.builtin.empty()) throw InvalidArgument("an operator is required (--input or --builtin)");
    return gen::builtin_operator(cfg.builtin, cfg.n > 0 ? cfg.n : 8, cfg.model);
}

std::string source_name(const RunConfig& cfg) { return cfg.input.empty() ? "builtin:" + cfg.builtin : cfg.input; }

json header(const std::string& command, const RunConfig& cfg) {
    return {{"schema", 1}, {"command", command}, {"seed", cfg.seed}, {"source", source_name(cfg)}};
}

Vector parse_vector(const std::string& list, int n, std::uint64_t seed) {
    if (list.empty()) {
        Rng rng(derive_seed(seed, 99));
        return rng.normal_vector(n);
    }
    std::vector<double> v;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            v.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw InvalidArgument("cannot parse vector entry '" + item + "'");
        }
    }
    if (static_cast<int>(v.size()) != n) throw InvalidArgument("--x has the wrong length");
    return Eigen::Map<const Vector>(v.data(), n);
}

int cmd_ks(const RunConfig& cfg, json& out) {
    if (!cfg.input.empty() && !cfg.builtin.empty()) throw InvalidArgument("give either --input or --builtin, not both");
    std::optional<KSElement> element;
    int n = cfg.n > 0 ? cfg.n : 1;
    if (!cfg.input.empty()) {
        GridFunction f = io::load_grid_function(cfg.input);
        n = f.grid().dimension();
        element = std::move(f);
    } else {
        if (cfg.builtin.empty()) throw InvalidArgument("a function is required (--input or --builtin)");
        if (cfg.m < 2) throw InvalidArgument("--m must be >= 2");
        const Grid grid(n, cfg.half_width, static_cast<std::size_t>(cfg.m));
        element = gen::builtin_element(cfg.builtin, grid);
    }
    if (cfg.k < 1) throw InvalidArgument("--K must be >= 1");
    const auto ks = KSConfig::dyadic(n, static_cast<std::size_t>(cfg.k));
    const auto report = embedding_report(*element, ks);
    out = header("ks", cfg);
    out["config"] = io::to_json(ks);
    out["report"] = io::to_json(report);
    out["passed"] = report.all_hold();
    return report.all_hold() ? kPass : kAssertionFailure;
}

int cmd_adjoint(const RunConfig& cfg, json& out) {
    const auto op = load_op(cfg);
    const double residual = max_defining_relation_residual(op, cfg.seed, cfg.samples);
    const auto ata = ata_analysis(op, derive_seed(cfg.seed, 1), cfg.samples);
    const auto lax = lax_bound(op);
    const auto natural = natural_selfadjoint_check(op);
    (void)inverse_i_plus_ata(op);
    const bool residual_ok = residual <= cfg.tol;
    const bool lax_ok = !lax.asserted || lax.holds;
    const bool natural_ok = !natural.single_metric || natural.agreement;
    const bool passed = residual_ok && ata.asserted_hold() && lax_ok && natural_ok;
    out = header("adjoint", cfg);
    out["model"] = io::to_json(op.model());
    out["n"] = op.dimension();
    out["defining_relation_residual"] = io::number(residual);
    out["g1_selfadjoint_residual"] = io::number(ata.g1_selfadjoint_residual);
    out["min_eig"] = io::number(ata.min_eig);
    out["lax_ratio"] = io::number(lax.ratio());
    out["accretivity_min"] = io::number(ata.accretivity_min);
    out["alt_star_gap"] = io::number(ata.alt_star_gap);
    out["ata"] = io::to_json(ata);
    out["lax"] = io::to_json(lax);
    out["natural_selfadjoint"] = io::to_json(natural);
    out["inverse_i_plus_ata"] = "ok";
    out["spectrum_preservation_gap"] = io::number(spectrum_preservation_gap(op));
    out["adjoint"] = io::to_json(banach_adjoint(op).matrix());
    out["passed"] = passed;
    return passed ? kPass : kAssertionFailure;
}

int cmd_spectral(const RunConfig& cfg, json& out) {
    const auto op = load_op(cfg);
    const auto pkg = spectral_package(op);
    const auto checks = spectral_checks(op, pkg, cfg.seed, cfg.samples);
    bool passed = checks.polar_residual <= cfg.tol && checks.projection_residual <= cfg.tol &&
                  checks.isometry_residual <= 1e-9;
    if (cfg.check == "reconstruct" || cfg.action == "reconstruct") passed = passed && checks.reconstruct_residual <= cfg.tol;
    else if (!cfg.check.empty()) throw InvalidArgument("unknown --check '" + cfg.check + "'");

    out = header("spectral", cfg);
    out["action"] = cfg.action;
    out["package"] = io::to_json(pkg);
    out["checks"] = io::to_json(checks);
    const Vector x = parse_vector(cfg.x, op.dimension(), cfg.seed);
    if (cfg.action == "reconstruct") {
        const Vector y = reconstruct(pkg, x);
        out["x"] = io::to_json(x);
        out["result"] = io::to_json(y);
        out["direct"] = io::to_json(Vector(op.matrix() * x));
        const auto bv = bv_vector_function(pkg.polar, pkg.family, x, op.triple());
        out["variation"] = io::to_json(bv);
        const double va = family_variation(pkg.family, x, op.triple());
        const bool hilbert = op.triple().single_metric();
        json var = {{"var_w_a", io::number(bv.variation)}, {"var_a", io::number(va)}, {"asserted", hilbert}};
        out["variation_inequality"] = var;
        if (hilbert) passed = passed && bv.variation <= va + 1e-10 * (1.0 + va);
    } else if (cfg.action == "apply") {
        const auto g = ScalarFunction::parse(cfg.g);
        out["g"] = g.name();
        out["x"] = io::to_json(x);
        out["result"] = io::to_json(functional_calculus(pkg, g, x));
        out["note"] = "g(A) = W g(R); g = one yields W x";
    } else if (cfg.action != "decompose") {
        throw InvalidArgument("spectral action must be decompose, reconstruct or apply");
    }
    out["passed"] = passed;
    return passed ? kPass : kAssertionFailure;
}

int cmd_schatten(const RunConfig& cfg, json& out) {
    const auto op = load_op(cfg);
    if (cfg.mode != "both" && cfg.mode != "h2" && cfg.mode != "H2" && cfg.mode != "b" && cfg.mode != "B")
        throw InvalidArgument("--mode must be both, h2 or b");
    const auto s = singular_values(op);
    out = header("schatten", cfg);
    out["p"] = cfg.p;
    out["mu"] = io::to_json(s.mu);
    bool passed = true;
    const bool want_h2 = cfg.mode != "b" && cfg.mode != "B";
    const bool want_b = cfg.mode != "h2" && cfg.mode != "H2";
    double h2 = 0.0, b = 0.0;
    if (want_h2) out["norm_h2"] = io::number(h2 = schatten_norm(op, cfg.p, SchattenMode::H2));
    if (want_b) out["norm_b"] = io::number(b = schatten_norm(op, cfg.p, SchattenMode::B));
    if (want_h2 && want_b) {
        const double gap = h2 > 0.0 ? std::abs(b - h2) / h2 : std::abs(b);
        out["equality_gap"] = io::number(gap);
        passed = passed && gap <= 1e-8;
    } else if (!(cfg.p >= 1.0)) {
        throw InvalidArgument("Schatten exponent must lie in [1, inf)");
    }
    const auto wh = weyl_horn_report(op, op, MonotoneMap::linear());
    out["weyl"] = {{"lhs", io::number(wh.weyl_lhs)}, {"rhs", io::number(wh.weyl_rhs)}, {"slack", io::number(wh.weyl_slack)}};
    out["horn"] = {{"lhs", io::number(wh.horn_lhs)}, {"rhs", io::number(wh.horn_rhs)}, {"slack", io::number(wh.horn_slack)}};
    const auto ll = lalesco_lidskii_report(op);
    out["lidskii_residual"] = io::number(ll.lidskii_residual);
    out["lalesco"] = io::to_json(ll);
    out["nuclear_upper"] = io::number(nuclear_upper_bound(op));
    out["nuclear_upper_label"] = "upper_bound";
    out["finite_rank_errors"] = io::to_json(finite_rank_errors(op));
    passed = passed && wh.weyl_slack >= -1e-10 && wh.horn_slack >= -1e-10 && ll.lalesco_slack >= -1e-10 &&
             ll.lidskii_residual <= 1e-8;
    out["passed"] = passed;
    return passed ? kPass : kAssertionFailure;
}

int cmd_poincare(const RunConfig& cfg, json& out) {
    const auto op = load_op(cfg);
    const auto rep = poincare_verify(op, cfg.samples, cfg.slack, cfg.seed);
    out = header("poincare", cfg);
    out.update(io::to_json(rep));
    out["passed"] = rep.holds();
    return rep.holds() ? kPass : kAssertionFailure;
}

int cmd_counterexample(const RunConfig& cfg, json& out) {
    const int n = cfg.n > 0 ? cfg.n : 2048;
    const auto r = ell1_counterexample(n);
    const double e1 = std::abs(r.x_norm_l2 - r.expected_x_norm_l2);
    const double e2 = std::abs(r.tx_minus_e1_l2 - r.expected_tx_minus_e1_l2);
    const bool passed = e1 <= 1e-12 && e2 <= 1e-12;
    out = header("counterexample", cfg);
    out["source"] = "shift_l1";
    out["report"] = io::to_json(r);
    out["passed"] = passed;
    return passed ? kPass : kAssertionFailure;
}

int cmd_suite(const RunConfig& cfg, json& out) {
    suite::SuiteOptions o;
    o.seed = cfg.seed;
    if (!cfg.criteria.empty()) {
        std::stringstream ss(cfg.criteria);
        std::string id;
        while (std::getline(ss, id, ','))
            if (!id.empty()) o.only.push_back(id);
    }
    const auto rep = suite::run_suite(o);
    out = suite::to_json(rep);
    for (const auto& r : rep.results)
        std::cerr << (r.passed ? "PASS " : "FAIL ") << r.number << ' ' << r.id << ": " << r.summary << '\n';
    if (!rep.passed()) {
        std::cerr << "failing criteria:";
        for (const auto& id : rep.failures()) std::cerr << ' ' << id;
        std::cerr << '\n';
    }
    return rep.passed() ? kPass : kAssertionFailure;
}

void emit(const json& report, const std::string& path) {
    const std::string text = report.dump(2) + "\n";
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw InvalidArgument("cannot write '" + path + "'");
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gross-Kuelbs triple and operator toolkit"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* ks = app.add_subcommand("ks", "KS norm and embedding inequalities of a function or point mass");
    add_common(ks, cfg);
    ks->add_option("--n", cfg.n, "Grid dimension for builtins")->check(CLI::Range(1, 3));
    ks->add_option("--L", cfg.half_width, "Grid half-width")->check(CLI::PositiveNumber);
    ks->add_option("--m", cfg.m, "Grid points per axis");
    ks->add_option("--K", cfg.k, "Number of cubes");

    auto* adj = app.add_subcommand("adjoint", "Banach adjoint and A*A checks");
    add_operator_options(adj, cfg);

    auto* spec = app.add_subcommand("spectral", "Polar decomposition, spectral family and calculus");
    add_operator_options(spec, cfg);
    spec->add_option("action", cfg.action, "decompose, reconstruct or apply");
    spec->add_option("--check", cfg.check, "Extra assertion: reconstruct");
    spec->add_option("--g", cfg.g, "Function for apply: identity, square, one, exp, step:a, poly:c0,c1,.., table:v1,..");
    spec->add_option("--x", cfg.x, "Comma-separated vector (default: seeded random)");

    auto* sch = app.add_subcommand("schatten", "Schatten norms and eigenvalue inequalities");
    add_operator_options(sch, cfg);
    sch->add_option("--p", cfg.p, "Schatten exponent");
    sch->add_option("--mode", cfg.mode, "both, h2 or b");

    auto* poi = app.add_subcommand("poincare", "Decay constants, contraction window and Poincare inequality");
    add_operator_options(poi, cfg);
    poi->add_option("--slack", cfg.slack, "Contraction slack (> 0)");

    auto* cex = app.add_subcommand("counterexample", "Unbounded l1 shift operator closed forms");
    add_common(cex, cfg);
    cex->add_option("--n", cfg.n, "Dimension")->check(CLI::Range(1, 8192));

    auto* sui = app.add_subcommand("suite", "Run the acceptance battery");
    add_common(sui, cfg);
    sui->add_option("--criteria", cfg.criteria, "Comma-separated criterion identifiers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kInputError;
    }

    json report;
    int code = kPass;
    try {
        if (ks->parsed()) code = cmd_ks(cfg, report);
        else if (adj->parsed()) code = cmd_adjoint(cfg, report);
        else if (spec->parsed()) code = cmd_spectral(cfg, report);
        else if (sch->parsed()) code = cmd_schatten(cfg, report);
        else if (poi->parsed()) code = cmd_poincare(cfg, report);
        else if (cex->parsed()) code = cmd_counterexample(cfg, report);
        else if (sui->parsed()) code = cmd_suite(cfg, report);
        emit(report, cfg.out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const Unsupported& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return kInputError;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kNumericalError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kAssertionFailure;
    }
    return code;
}
