#include "gkt/suite.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "gkt/adjoint.hpp"
#include "gkt/errors.hpp"
#include "gkt/generators.hpp"
#include "gkt/json_io.hpp"
#include "gkt/ks_space.hpp"
#include "gkt/random.hpp"
#include "gkt/schatten.hpp"
#include "gkt/semigroup.hpp"
#include "gkt/spectral.hpp"

namespace gkt::suite {

using nlohmann::json;

namespace {

template <typename T, typename F>
std::vector<T> sweep(int count, F&& f) {
    std::vector<T> out(static_cast<std::size_t>(count));
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < count; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = f(i);
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return out;
}

double max_of(const std::vector<double>& v) {
    return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

double min_of(const std::vector<double>& v) {
    return v.empty() ? 0.0 : *std::min_element(v.begin(), v.end());
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

CriterionResult make(bool passed, std::string summary, json details) {
    CriterionResult r;
    r.passed = passed;
    r.summary = std::move(summary);
    r.details = std::move(details);
    return r;
}

// 1
CriterionResult cube_order(std::uint64_t) {
    const std::vector<CubeIndex> expected = {{1, 1}, {2, 1}, {1, 2}, {1, 3}, {2, 2}, {3, 1}, {3, 2}, {2, 3}};
    const auto got = cube_enumeration(8);
    json list = json::array();
    for (const auto& c : got) list.push_back({c.level, c.rational});
    const bool ok = got == expected;
    return make(ok, ok ? "first 8 pairs match" : "first 8 pairs differ", {{"pairs", list}});
}

// 2
std::vector<std::pair<std::string, KSElement>> embedding_functions(std::uint64_t seed) {
    const Grid g4(1, 4.0, 2049);
    const Grid g8(1, 8.0, 4096);
    std::vector<std::pair<std::string, KSElement>> fs;
    auto add = [&](std::string name, const Grid& g, std::function<double(double)> fn) {
        fs.emplace_back(std::move(name), GridFunction::sample(g, [&fn](const Point& x) { return fn(x[0]); }));
    };
    for (double c : {-1.0, 0.0, 0.5, 1.3})
        for (double s : {0.1, 0.5, 1.0})
            add("gaussian", g4, [c, s](double x) { return std::exp(-(x - c) * (x - c) / (2 * s * s)); });
    for (auto [a, b] : std::vector<std::pair<double, double>>{{0, 1}, {-0.25, 0.25}, {-2, 3}, {0.1, 0.2}, {-1, -0.3}, {1.5, 3.9}})
        add("indicator", g4, [a, b](double x) { return x >= a && x <= b ? 1.0 : 0.0; });
    for (double w : {1.0, 0.5, 0.25, 2.0})
        add("signed_step", g4, [w](double x) { return x >= 0 && x < w ? 1.0 : (x >= w && x <= 2 * w ? -1.0 : 0.0); });
    add("chirp", g4, [](double x) { return 2 * x * std::cos(x * x); });
    add("chirp", g8, [](double x) { return 2 * x * std::cos(x * x); });
    add("chirp", g8, [](double x) { return -3 * x * std::cos(x * x); });
    add("chirp", g4, [](double x) { return 2 * (x - 0.5) * std::cos((x - 0.5) * (x - 0.5)); });
    for (double k : {1.0, 3.0, 10.0, 30.0})
        add("oscillatory", g4, [k](double x) { return std::sin(k * x) * std::exp(-x * x / 4); });
    add("bump", g4, [](double x) { return std::max(0.0, 1 - x * x); });
    add("bump", g4, [](double x) { return std::abs(x) * std::exp(-std::abs(x)); });
    add("bump", g4, [](double x) { return std::max(0.0, 1 - std::abs(x - 2)); });
    add("bump", g4, [](double x) { return x * std::exp(-x * x); });
    Rng rng(seed);
    for (int r = 0; r < 6; ++r) {
        std::vector<double> levels(16);
        for (auto& v : levels) v = rng.uniform(-2.0, 2.0);
        add("piecewise_constant", g4, [levels](double x) {
            const int cell = std::clamp(static_cast<int>(std::floor((x + 4.0) / 0.5)), 0, 15);
            return levels[static_cast<std::size_t>(cell)];
        });
    }
    const std::vector<std::pair<double, double>> masses = {{0, 1}, {0.5, -2}, {-0.3, 0.5}, {1.0 / 3.0, 3}, {2.71, 1}, {0.125, 1}};
    for (auto [y, w] : masses) fs.emplace_back("point_mass", PointMass{{y}, w});
    for (int k = 0; k < 4; ++k) add("hermite", g4, [k](double x) { return hermite_function(k, x); });
    return fs;
}

CriterionResult ks_embedding(std::uint64_t seed) {
    const auto cfg = KSConfig::dyadic(1, 512);
    const auto fs = embedding_functions(derive_seed(seed, 2));
    const auto reports = sweep<EmbeddingReport>(static_cast<int>(fs.size()),
                                                [&](int i) { return embedding_report(fs[static_cast<std::size_t>(i)].second, cfg); });
    int failures = 0;
    json failing = json::array();
    double worst_alex = 0.0;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        if (!r.all_hold()) {
            ++failures;
            failing.push_back({{"index", i}, {"kind", fs[i].first}, {"report", io::to_json(r)}});
        }
        if (r.alexiewicz > 0) worst_alex = std::max(worst_alex, r.ks / r.alexiewicz);
    }
    return make(failures == 0, std::to_string(reports.size()) + " functions, " + std::to_string(failures) + " failing",
                {{"functions", reports.size()}, {"failures", failing}, {"max_ks_over_alexiewicz", worst_alex}});
}

// 3
CriterionResult dirac(std::uint64_t) {
    const auto cfg = KSConfig::dyadic(1, 512);
    const double got = ks_norm(PointMass{{0.0}, 1.0}, cfg);
    const auto& idx = cfg.enumeration().indices();
    const auto& cubes = cfg.enumeration().cubes();
    double mass = 0.0;
    int covering = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        const double half = std::ldexp(1.0, -idx[k].level) / 2.0;
        if (std::abs(cubes[k].center()[0]) <= half) {
            mass += cfg.weights()[k];
            ++covering;
        }
    }
    const double expected = std::sqrt(mass);
    const double gap = std::abs(got - expected);
    return make(std::isfinite(got) && gap <= 1e-12, "gap " + fmt(gap),
                {{"ks_norm", got}, {"oracle", expected}, {"covering_cubes", covering}, {"gap", gap}});
}

// 4
CriterionResult triple(std::uint64_t seed) {
    struct Row {
        double phi, spec, h1, h2;
    };
    const auto rows = sweep<Row>(20, [&](int i) {
        const std::uint64_t s = derive_seed(seed, 4, static_cast<std::uint64_t>(i));
        Rng rng(s);
        const int n = 2 + static_cast<int>(rng.next() % 15);
        const int kind = static_cast<int>(rng.next() % gen::kModelKinds);
        const GKTriple t = GKTriple::random(gen::model_kind(kind, n), derive_seed(s, 1));
        const auto c = check_triple(t);
        const auto id = triple_identity_residual(t, derive_seed(s, 2), 100);
        return Row{c.phi_orthonormality, c.t12_spectrum_gap, id.h1_from_h2, id.h2_from_h1};
    });
    double phi = 0, spec = 0, h1 = 0, h2 = 0;
    for (const auto& r : rows) {
        phi = std::max(phi, r.phi);
        spec = std::max(spec, r.spec);
        h1 = std::max(h1, r.h1);
        h2 = std::max(h2, r.h2);
    }
    const bool ok = phi <= 1e-8 && spec <= 1e-8 && h1 <= 1e-8;
    return make(ok, "max residual " + fmt(std::max({phi, spec, h1})),
                {{"triples", rows.size()},
                 {"phi_orthonormality", phi},
                 {"t12_spectrum_gap", spec},
                 {"h1_from_h2", h1},
                 {"observed", {{"h2_from_h1", h2}}}});
}

OperatorOnB adjoint_instance(std::uint64_t seed, int i) {
    return gen::random_operator(derive_seed(seed, 5, static_cast<std::uint64_t>(i)));
}

// 5
CriterionResult adjoint(std::uint64_t seed) {
    const auto res = sweep<double>(200, [&](int i) {
        return max_defining_relation_residual(adjoint_instance(seed, i), derive_seed(seed, 50, static_cast<std::uint64_t>(i)), 100);
    });
    Rng rng(derive_seed(seed, 51));
    double hilbert_gap = 0.0;
    for (int k = 0; k < 10; ++k) {
        const auto op = OperatorOnB::hilbert(rng.normal_matrix(8, 8));
        hilbert_gap = std::max(hilbert_gap, (banach_adjoint(op).matrix() - op.matrix().transpose()).cwiseAbs().maxCoeff());
    }
    const double worst = max_of(res);
    const bool ok = worst <= 1e-10 && hilbert_gap <= 1e-14;
    return make(ok, "max residual " + fmt(worst) + ", Hilbert gap " + fmt(hilbert_gap),
                {{"operators", res.size()}, {"pairs", 100}, {"max_residual", worst}, {"hilbert_transpose_gap", hilbert_gap}});
}

// 6
CriterionResult ata(std::uint64_t seed) {
    struct Row {
        AtaReport r;
        double inverse = 0.0;
    };
    const auto rows = sweep<Row>(200, [&](int i) {
        const auto op = adjoint_instance(seed, i);
        Row row;
        row.r = ata_analysis(op, derive_seed(seed, 60, static_cast<std::uint64_t>(i)));
        try {
            (void)inverse_i_plus_ata(op);
        } catch (const ConditioningError&) {
            row.inverse = 1.0;
        }
        return row;
    });
    double sa = 0, min_eig = std::numeric_limits<double>::infinity(), pos = min_eig, acc = min_eig, gap = 0;
    int failed = 0, inverse_failed = 0;
    for (const auto& row : rows) {
        sa = std::max(sa, row.r.g1_selfadjoint_residual);
        min_eig = std::min(min_eig, row.r.min_eig);
        pos = std::min(pos, row.r.min_positivity);
        acc = std::min(acc, row.r.accretivity_min);
        gap = std::max(gap, row.r.alt_star_gap);
        if (!row.r.asserted_hold()) ++failed;
        if (row.inverse != 0.0) ++inverse_failed;
    }
    const bool ok = failed == 0 && inverse_failed == 0;
    return make(ok, "selfadjoint residual " + fmt(sa) + ", min eig " + fmt(min_eig),
                {{"operators", rows.size()},
                 {"asserted",
                  {{"g1_selfadjoint_residual", sa},
                   {"min_eig", min_eig},
                   {"min_positivity", pos},
                   {"inverse_failures", inverse_failed}}},
                 {"observed", {{"accretivity_min", acc}, {"alt_star_gap_max", gap}}}});
}

// 7
CriterionResult lax(std::uint64_t seed) {
    const auto reports = sweep<LaxReport>(500, [&](int i) {
        const std::uint64_t s = derive_seed(seed, 7, static_cast<std::uint64_t>(i));
        Rng rng(s);
        const int n = 2 + static_cast<int>(rng.next() % 15);
        return lax_bound(gen::random_g2_selfadjoint_l1(derive_seed(s, 1), n));
    });
    int not_asserted = 0, violations = 0;
    double ratio = 0.0;
    for (const auto& r : reports) {
        if (!r.asserted) ++not_asserted;
        if (!r.holds) ++violations;
        ratio = std::max(ratio, r.ratio());
    }
    const bool ok = not_asserted == 0 && violations == 0;
    return make(ok, "max ||A||_G2 / ||A||_l1 = " + fmt(ratio),
                {{"operators", reports.size()}, {"max_lax_ratio", ratio}, {"violations", violations}, {"premise_failures", not_asserted}});
}

// 8
CriterionResult counterexample(std::uint64_t) {
    json rows = json::array();
    bool ok = true;
    for (int n : {1, 4, 64, 2048}) {
        const auto r = ell1_counterexample(n);
        const double e1 = std::abs(r.x_norm_l2 - 1.0 / std::sqrt(static_cast<double>(n)));
        const double e2 = std::abs(r.tx_minus_e1_l2 - std::sqrt(static_cast<double>(n - 1)) / n);
        const bool norm_ok = n == 1 ? r.t_norm_l1 == 1.0 : r.t_norm_l1 == 2.0;
        ok = ok && e1 <= 1e-12 && e2 <= 1e-12 && norm_ok;
        rows.push_back({{"n", n}, {"report", io::to_json(r)}, {"x_error", e1}, {"tx_error", e2}});
    }
    return make(ok, ok ? "closed forms reproduced" : "closed-form mismatch", {{"cases", rows}});
}

// 9
CriterionResult polar(std::uint64_t seed) {
    const auto checks = sweep<SpectralChecks>(200, [&](int i) {
        const std::uint64_t s = derive_seed(seed, 9, static_cast<std::uint64_t>(i));
        const auto op = gen::random_operator(s, i % gen::kModelKinds);
        return spectral_checks(op, spectral_package(op), derive_seed(s, 2), 20);
    });
    SpectralChecks w;
    w.r_min_eig = std::numeric_limits<double>::infinity();
    for (const auto& c : checks) {
        w.polar_residual = std::max(w.polar_residual, c.polar_residual);
        w.reconstruct_residual = std::max(w.reconstruct_residual, c.reconstruct_residual);
        w.isometry_residual = std::max(w.isometry_residual, c.isometry_residual);
        w.projection_residual = std::max(w.projection_residual, c.projection_residual);
        w.r_selfadjoint = std::max(w.r_selfadjoint, c.r_selfadjoint);
        w.r_squared_residual = std::max(w.r_squared_residual, c.r_squared_residual);
        w.r_min_eig = std::min(w.r_min_eig, c.r_min_eig);
    }
    const bool ok = w.polar_residual <= 1e-10 && w.reconstruct_residual <= 1e-10 && w.isometry_residual <= 1e-9;
    return make(ok,
                "polar " + fmt(w.polar_residual) + ", reconstruct " + fmt(w.reconstruct_residual) + ", isometry " +
                    fmt(w.isometry_residual),
                {{"operators", checks.size()}, {"worst", io::to_json(w)}});
}

// 10
CriterionResult calculus(std::uint64_t seed) {
    struct Row {
        double identity, square;
    };
    const auto id = ScalarFunction::parse("identity");
    const auto sq = ScalarFunction::parse("square");
    const auto rows = sweep<Row>(50, [&](int i) {
        const std::uint64_t s = derive_seed(seed, 10, static_cast<std::uint64_t>(i));
        const auto op = gen::random_operator(s, i % gen::kModelKinds);
        const auto pkg = spectral_package(op);
        Rng rng(derive_seed(s, 2));
        Row row{0, 0};
        const Matrix wr2 = pkg.polar.w * pkg.polar.r * pkg.polar.r;
        for (int k = 0; k < 10; ++k) {
            const Vector x = rng.normal_vector(op.dimension());
            const double sa = op.matrix().norm() * x.norm();
            const double sb = pkg.polar.w.norm() * pkg.polar.r.squaredNorm() * x.norm();
            row.identity = std::max(row.identity, (functional_calculus(pkg, id, x) - op.matrix() * x).norm() / sa);
            row.square = std::max(row.square, (functional_calculus(pkg, sq, x) - wr2 * x).norm() / sb);
        }
        return row;
    });
    const auto blocks = sweep<double>(20, [&](int i) {
        Rng rng(derive_seed(seed, 101, static_cast<std::uint64_t>(i)));
        BlockOperator b(2);
        for (auto& row : b)
            for (int j = 0; j < 2; ++j) row.push_back(OperatorOnB::hilbert(rng.normal_matrix(4, 4)));
        const Vector x = rng.normal_vector(8);
        const Matrix full = assemble_blocks(b);
        return (block_spectral(b, x) - full * x).norm() / (full.norm() * x.norm());
    });
    double ident = 0, square = 0;
    for (const auto& r : rows) {
        ident = std::max(ident, r.identity);
        square = std::max(square, r.square);
    }
    const double block = max_of(blocks);
    const bool ok = ident <= 1e-10 && square <= 1e-10 && block <= 1e-10;
    return make(ok, "identity " + fmt(ident) + ", square " + fmt(square) + ", blocks " + fmt(block),
                {{"identity_residual", ident}, {"square_residual", square}, {"block_residual", block}});
}

// 11
CriterionResult schatten(std::uint64_t seed) {
    const int per_kind = 200;
    const auto gaps = sweep<double>(per_kind * gen::kModelKinds, [&](int i) {
        const auto op = gen::random_operator(derive_seed(seed, 11, static_cast<std::uint64_t>(i)), i % gen::kModelKinds);
        double worst = 0.0;
        for (double p : {1.0, 2.0, 3.0, 4.0}) {
            const double h2 = schatten_norm(op, p, SchattenMode::H2);
            const double b = schatten_norm(op, p, SchattenMode::B);
            worst = std::max(worst, h2 > 0 ? std::abs(b - h2) / h2 : std::abs(b));
        }
        return worst;
    });
    std::vector<double> by_kind(gen::kModelKinds, 0.0);
    for (std::size_t i = 0; i < gaps.size(); ++i)
        by_kind[i % gen::kModelKinds] = std::max(by_kind[i % gen::kModelKinds], gaps[i]);
    const double worst = max_of(gaps);
    return make(worst <= 1e-8, "max relative gap " + fmt(worst),
                {{"operators_per_kind", per_kind},
                 {"max_relative_gap", worst},
                 {"by_kind", {{"l1", by_kind[0]}, {"l2", by_kind[1]}, {"sup", by_kind[2]}, {"lp:3", by_kind[3]}}}});
}

// 12
CriterionResult eigen_inequalities(std::uint64_t seed) {
    struct Row {
        double weyl = 0, horn = 0, lalesco = 0, lidskii = 0;
    };
    const std::vector<MonotoneMap> maps = {MonotoneMap::linear(), MonotoneMap::square(), MonotoneMap::expm1()};
    const auto rows = sweep<Row>(500, [&](int i) {
        const std::uint64_t s = derive_seed(seed, 12, static_cast<std::uint64_t>(i));
        const auto a1 = gen::random_operator(s, i % gen::kModelKinds, 8, 8);
        Rng rng(derive_seed(s, 3));
        const auto a2 = a1.with_matrix(rng.normal_matrix(8, 8) / std::sqrt(8.0));
        Row row;
        row.weyl = row.horn = std::numeric_limits<double>::infinity();
        for (const auto& phi : maps) {
            const auto r = weyl_horn_report(a1, a2, phi);
            row.weyl = std::min(row.weyl, r.weyl_slack);
            row.horn = std::min(row.horn, r.horn_slack);
        }
        const auto ll = lalesco_lidskii_report(a1);
        row.lalesco = ll.lalesco_slack;
        row.lidskii = ll.lidskii_residual;
        return row;
    });
    Row w;
    w.weyl = w.horn = w.lalesco = std::numeric_limits<double>::infinity();
    for (const auto& r : rows) {
        w.weyl = std::min(w.weyl, r.weyl);
        w.horn = std::min(w.horn, r.horn);
        w.lalesco = std::min(w.lalesco, r.lalesco);
        w.lidskii = std::max(w.lidskii, r.lidskii);
    }
    const bool ok = w.weyl >= -1e-10 && w.horn >= -1e-10 && w.lalesco >= -1e-10 && w.lidskii <= 1e-8;
    return make(ok,
                "min slack weyl " + fmt(w.weyl) + ", horn " + fmt(w.horn) + ", lalesco " + fmt(w.lalesco) +
                    "; lidskii " + fmt(w.lidskii),
                {{"pairs", rows.size()},
                 {"maps", {"t", "t^2", "exp(t)-1"}},
                 {"min_weyl_slack", w.weyl},
                 {"min_horn_slack", w.horn},
                 {"min_lalesco_slack", w.lalesco},
                 {"max_lidskii_residual", w.lidskii}});
}

// 13
CriterionResult poincare(std::uint64_t seed) {
    DecayEstimate unit;
    unit.m = 1.0;
    unit.mu = 1.0;
    const auto w = contraction_window(unit, 1.0);
    const double c = poincare_constant(w);
    const double e_t = std::abs(w.t - 1.0);
    const double e_r = std::abs(w.r - std::exp(-1.0));
    const double e_c = std::abs(c - 1.0 / (1.0 - std::exp(-1.0)));
    const bool window_ok = e_t <= 1e-14 && e_r <= 1e-14 && e_c <= 1e-12;

    const auto reports = sweep<PoincareReport>(50, [&](int i) {
        const std::uint64_t s = derive_seed(seed, 13, static_cast<std::uint64_t>(i));
        return poincare_verify(gen::random_operator(s, i % gen::kModelKinds), 1000, 1.0, derive_seed(s, 2));
    });
    int violations = 0, observed = 0;
    double worst = std::numeric_limits<double>::infinity();
    double decay_ratio = 0.0;
    for (const auto& r : reports) {
        violations += r.violations;
        observed += r.observed_b_violations;
        worst = std::min(worst, r.worst_ratio);
        decay_ratio = std::max(decay_ratio, r.decay.worst_bound_ratio);
    }
    const bool ok = window_ok && violations == 0;
    return make(ok, "window error " + fmt(std::max({e_t, e_r, e_c})) + ", " + std::to_string(violations) +
                        " violations, min c||Ru||/||u|| " + fmt(worst),
                {{"window", {{"T", w.t}, {"r", w.r}, {"c", c}, {"T_error", e_t}, {"r_error", e_r}, {"c_error", e_c}}},
                 {"operators", reports.size()},
                 {"samples_per_operator", 1000},
                 {"violations", violations},
                 {"min_ratio", worst},
                 {"max_decay_bound_ratio", decay_ratio},
                 {"observed", {{"b_norm_violations", observed}}}});
}

// 14
CriterionResult yosida(std::uint64_t seed) {
    Matrix a(1, 1);
    a(0, 0) = -1.0;
    double scalar_error = 0.0;
    json scalar = json::array();
    for (double l : {1.0, 10.0, 100.0}) {
        const double err = std::abs((yosida_approximant(a, l) - a)(0, 0));
        scalar_error = std::max(scalar_error, std::abs(err - 1.0 / (l + 1.0)));
        scalar.push_back({{"lambda", l}, {"error", err}});
    }
    auto spectral_norm = [](const Matrix& m) { return Eigen::JacobiSVD<Matrix>(m).singularValues()(0); };
    const auto improved = sweep<int>(50, [&](int i) {
        const Matrix s = gen::random_stable_matrix(derive_seed(seed, 14, static_cast<std::uint64_t>(i)), 8);
        const double e2 = spectral_norm(yosida_approximant(s, 1e2) - s);
        const double e3 = spectral_norm(yosida_approximant(s, 1e3) - s);
        return e3 < e2 ? 1 : 0;
    });
    const int count = static_cast<int>(std::count(improved.begin(), improved.end(), 1));
    const bool ok = scalar_error <= 1e-12 && count == 50;
    return make(ok, "scalar error " + fmt(scalar_error) + ", " + std::to_string(count) + "/50 improve",
                {{"scalar", scalar}, {"scalar_error", scalar_error}, {"improved", count}});
}

using Runner = CriterionResult (*)(std::uint64_t);

const std::vector<std::pair<std::string, Runner>>& runners() {
    static const std::vector<std::pair<std::string, Runner>> r = {
        {"cube_order", cube_order},
        {"ks_embedding", ks_embedding},
        {"dirac", dirac},
        {"triple", triple},
        {"adjoint", adjoint},
        {"ata", ata},
        {"lax", lax},
        {"counterexample", counterexample},
        {"polar", polar},
        {"calculus", calculus},
        {"schatten", schatten},
        {"eigen_inequalities", eigen_inequalities},
        {"poincare", poincare},
        {"yosida", yosida},
        {"determinism", nullptr},
    };
    return r;
}

int number_of(const std::string& id) {
    const auto& r = runners();
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i].first == id) return static_cast<int>(i) + 1;
    throw InvalidArgument("unknown criterion '" + id + "'");
}

}  // namespace

const std::vector<std::string>& criterion_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, fn] : runners()) v.push_back(id);
        return v;
    }();
    return ids;
}

CriterionResult run_criterion(const std::string& id, std::uint64_t seed) {
    const int number = number_of(id);
    if (id == "determinism") {
        SuiteOptions o;
        o.seed = seed;
        o.only = {id};
        return run_suite(o).results.front();
    }
    CriterionResult r;
    try {
        r = runners()[static_cast<std::size_t>(number - 1)].second(seed);
    } catch (const std::exception& e) {
        r = make(false, std::string("error: ") + e.what(), json::object());
    }
    r.number = number;
    r.id = id;
    return r;
}

bool SuiteReport::passed() const {
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

std::vector<std::string> SuiteReport::failures() const {
    std::vector<std::string> f;
    for (const auto& r : results)
        if (!r.passed) f.push_back(r.id);
    return f;
}

SuiteReport run_suite(const SuiteOptions& options) {
    std::vector<std::string> selected;
    if (options.only.empty()) {
        selected = criterion_ids();
    } else {
        std::map<int, std::string> ordered;
        for (const auto& id : options.only) ordered[number_of(id)] = id;
        for (const auto& [n, id] : ordered) selected.push_back(id);
    }
    const bool determinism = std::find(selected.begin(), selected.end(), "determinism") != selected.end();
    std::vector<std::string> others;
    for (const auto& id : selected)
        if (id != "determinism") others.push_back(id);

    SuiteReport report;
    report.seed = options.seed;
    auto run_all = [&](const std::vector<std::string>& ids) {
        std::vector<CriterionResult> out;
        for (const auto& id : ids) out.push_back(run_criterion(id, options.seed));
        return out;
    };
    report.results = run_all(others);
    if (determinism) {
        std::vector<std::string> rerun_ids = others;
        if (rerun_ids.empty()) rerun_ids.assign(criterion_ids().begin(), criterion_ids().end() - 1);
        std::vector<CriterionResult> first = others.empty() ? run_all(rerun_ids) : report.results;
        const auto second = run_all(rerun_ids);
        json a = json::array(), b = json::array();
        for (const auto& r : first) a.push_back(to_json(r));
        for (const auto& r : second) b.push_back(to_json(r));
        const bool same = a.dump() == b.dump();
        CriterionResult d = make(same, same ? "rerun is byte-identical" : "rerun differs",
                                 {{"criteria_compared", rerun_ids.size()}, {"bytes", a.dump().size()}});
        d.number = number_of("determinism");
        d.id = "determinism";
        report.results.push_back(std::move(d));
    }
    return report;
}

json to_json(const CriterionResult& r) {
    return {{"number", r.number}, {"id", r.id}, {"passed", r.passed}, {"summary", r.summary}, {"details", r.details}};
}

json to_json(const SuiteReport& r) {
    json crit = json::array();
    for (const auto& c : r.results) crit.push_back(to_json(c));
    return {{"schema", 1}, {"command", "suite"}, {"seed", r.seed}, {"passed", r.passed()}, {"failures", r.failures()},
            {"criteria", crit}};
}

}  // namespace gkt::suite
