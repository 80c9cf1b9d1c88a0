// One line per acceptance criterion; exit status 1 when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "cli_process.hpp"
#include "gkt/adjoint.hpp"
#include "gkt/errors.hpp"
#include "gkt/generators.hpp"
#include "gkt/ks_space.hpp"
#include "gkt/random.hpp"
#include "gkt/schatten.hpp"
#include "gkt/semigroup.hpp"
#include "gkt/spectral.hpp"
#include "oracles.hpp"

using namespace gkt;

namespace {

constexpr std::uint64_t kSeed = 20261016;

struct Outcome {
    bool passed = true;
    std::string detail;
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

std::uint64_t seed_for(int criterion, std::uint64_t i) { return derive_seed(kSeed, 100 + criterion, i); }

Matrix sym_sqrt(const Matrix& g) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(g);
    return es.operatorSqrt();
}

Matrix sym_inv_sqrt(const Matrix& g) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(g);
    return es.operatorInverseSqrt();
}

double spectral_norm(const Matrix& m) { return Eigen::JacobiSVD<Matrix>(m).singularValues()(0); }

double gnorm(const Vector& x, const Matrix& g) { return std::sqrt(std::max(0.0, x.dot(g * x))); }

// Trapezoid norms on a 1-d grid, written out independently of the library.
struct ClassicalNorms {
    double l1 = 0, l2 = 0, linf = 0, alexiewicz = 0;
};

ClassicalNorms classical(const GridFunction& f) {
    const auto& v = f.values();
    const double h = f.grid().spacing();
    ClassicalNorms c;
    double running = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double w = (i == 0 || i + 1 == v.size()) ? 0.5 * h : h;
        c.l1 += w * std::abs(v[i]);
        c.l2 += w * v[i] * v[i];
        c.linf = std::max(c.linf, std::abs(v[i]));
        if (i > 0) running += 0.5 * h * (v[i - 1] + v[i]);
        c.alexiewicz = std::max(c.alexiewicz, std::abs(running));
    }
    c.l2 = std::sqrt(c.l2);
    return c;
}

Outcome c1_cube_order() {
    const std::vector<CubeIndex> expected = {{1, 1}, {2, 1}, {1, 2}, {1, 3}, {2, 2}, {3, 1}, {3, 2}, {2, 3}};
    const bool ok = cube_enumeration(8) == expected;
    return {ok, ok ? "exact match" : "mismatch"};
}

Outcome c2_ks_embedding() {
    const auto cfg = KSConfig::dyadic(1, 512);
    const Grid g4(1, 4.0, 2049), g8(1, 8.0, 4096);
    std::vector<GridFunction> fns;
    for (int k = 0; k < 10; ++k) {
        const double s = 0.2 + 0.3 * k;
        fns.push_back(GridFunction::sample(g4, [s](const Point& x) { return std::exp(-x[0] * x[0] / (2 * s * s)); }));
    }
    for (int k = 0; k < 10; ++k) {
        const double a = -3.0 + 0.5 * k, b = a + 0.3 + 0.2 * k;
        fns.push_back(GridFunction::sample(g4, [a, b](const Point& x) { return x[0] >= a && x[0] <= b ? 1.0 : 0.0; }));
    }
    for (int k = 0; k < 8; ++k) {
        const double w = 1.0 + k;
        fns.push_back(GridFunction::sample(g4, [w](const Point& x) { return std::sin(w * x[0]) * std::exp(-0.1 * x[0] * x[0]); }));
    }
    for (int k = 0; k < 8; ++k) {
        const double a = 1.0 + 0.25 * k;
        fns.push_back(GridFunction::sample(g8, [a](const Point& x) { return 2 * a * x[0] * std::cos(a * x[0] * x[0]); }));
    }
    for (int k = 0; k < 8; ++k) {
        const double c = -2.0 + 0.5 * k;
        fns.push_back(GridFunction::sample(g4, [c](const Point& x) { return x[0] < c ? -1.0 : 2.0 * std::exp(-(x[0] - c)); }));
    }
    int failures = 0;
    double worst = -INFINITY;
    auto check = [&](double ks, double bound) {
        worst = std::max(worst, ks - bound);
        if (ks > bound + 1e-9) ++failures;
    };
    for (const auto& f : fns) {
        const double ks = ks_norm(f, cfg);
        const auto c = classical(f);
        check(ks, c.l1);
        check(ks, c.l2);
        check(ks, c.linf);
        check(ks, 2.0 * c.alexiewicz);
    }
    for (double y : {0.0, 0.5, -0.75, 1.0 / 3.0, 2.0, -3.5}) {
        const double w = 1.0 + std::abs(y);
        const double ks = ks_norm(PointMass{{y}, w}, cfg);
        check(ks, w);
        check(ks, 2.0 * w);
    }
    const int total = static_cast<int>(fns.size()) + 6;
    return {failures == 0 && total >= 50,
            std::to_string(total) + " functions, " + std::to_string(failures) + " violations, max ks - bound " + fmt(worst)};
}

Outcome c3_dirac() {
    const double got = ks_norm(PointMass{{0.0}, 1.0}, KSConfig::dyadic(1, 512));
    const double expected = std::sqrt(gkt::testing::oracle_origin_mass(512));
    const double gap = std::abs(got - expected);
    return {std::isfinite(got) && gap <= 1e-12, "ks " + fmt(got) + ", oracle " + fmt(expected) + ", gap " + fmt(gap)};
}

Outcome c4_triple() {
    double worst = 0.0;
    for (std::uint64_t i = 0; i < 20; ++i) {
        const int n = 2 + static_cast<int>(i % 15);
        const auto triple = GKTriple::random(gen::model_kind(static_cast<int>(i % gen::kModelKinds), n), seed_for(4, i));
        const Matrix& g2 = triple.g2();
        const Matrix& phi = triple.phi();
        worst = std::max(worst, (phi.transpose() * g2 * phi - Matrix::Identity(n, n)).cwiseAbs().maxCoeff());

        const Matrix t12 = phi * triple.lambda().asDiagonal() * phi.transpose() * g2;
        Eigen::EigenSolver<Matrix> es(t12);
        std::vector<double> eig(n), lam(triple.lambda().data(), triple.lambda().data() + n);
        for (int k = 0; k < n; ++k) eig[k] = es.eigenvalues()(k).real();
        std::sort(eig.begin(), eig.end());
        std::sort(lam.begin(), lam.end());
        for (int k = 0; k < n; ++k) worst = std::max(worst, std::abs(eig[k] - lam[k]) / lam.back());

        const Matrix tinv = phi * triple.lambda().cwiseInverse().cwiseSqrt().asDiagonal() * phi.transpose() * g2;
        Rng rng(seed_for(4, 1000 + i));
        for (int k = 0; k < 100; ++k) {
            const Vector u = rng.normal_vector(n), v = rng.normal_vector(n);
            const double lhs = u.dot(triple.g1() * v);
            const double rhs = (tinv * u).dot(g2 * (tinv * v));
            worst = std::max(worst, std::abs(lhs - rhs) / (gnorm(u, triple.g1()) * gnorm(v, triple.g1())));
        }
    }
    return {worst <= 1e-8, "max residual " + fmt(worst)};
}

std::vector<OperatorOnB> operators_200(int criterion) {
    std::vector<OperatorOnB> ops;
    for (std::uint64_t i = 0; i < 200; ++i)
        ops.push_back(gen::random_operator(seed_for(criterion, i), static_cast<int>(i % gen::kModelKinds), 2, 16));
    return ops;
}

Outcome c5_adjoint() {
    double worst = 0.0;
    std::uint64_t i = 0;
    for (const auto& op : operators_200(5)) {
        const Matrix& a = op.matrix();
        const Matrix& g1 = op.triple().g1();
        const Matrix& g2 = op.triple().g2();
        const Matrix adj = banach_adjoint(op).matrix();
        Rng rng(seed_for(5, 1000 + i++));
        for (int k = 0; k < 100; ++k) {
            const Vector x = rng.normal_vector(op.dimension()), v = rng.normal_vector(op.dimension());
            const double lhs = x.dot(g1 * (adj * v));
            const double rhs = (a * x).dot(g2 * v);
            const double scale = gnorm(x, g1) * gnorm(adj * v, g1) + gnorm(a * x, g2) * gnorm(v, g2);
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(scale, 1e-300));
        }
    }
    double hilbert = 0.0;
    for (std::uint64_t k = 0; k < 20; ++k) {
        Rng rng(seed_for(5, 5000 + k));
        const Matrix a = rng.normal_matrix(8, 8);
        hilbert = std::max(hilbert, (banach_adjoint(OperatorOnB::hilbert(a)).matrix() - a.transpose()).cwiseAbs().maxCoeff());
    }
    return {worst <= 1e-10 && hilbert <= 1e-14, "max relative residual " + fmt(worst) + ", Hilbert gap " + fmt(hilbert)};
}

Outcome c6_ata() {
    double sa = 0.0, min_eig = INFINITY, inv = 0.0;
    for (const auto& op : operators_200(5)) {
        const int n = op.dimension();
        const Matrix& g1 = op.triple().g1();
        const Matrix c = banach_adjoint(op).matrix() * op.matrix();
        const Matrix gc = g1 * c;
        const double gcn = gc.norm();
        if (gcn > 0) sa = std::max(sa, (gc - gc.transpose()).norm() / gcn);
        const Matrix s = sym_inv_sqrt(g1) * (0.5 * (gc + gc.transpose())) * sym_inv_sqrt(g1);
        Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (s + s.transpose()));
        min_eig = std::min(min_eig, es.eigenvalues()(0));
        const Matrix x = inverse_i_plus_ata(op);
        inv = std::max(inv, ((Matrix::Identity(n, n) + c) * x - Matrix::Identity(n, n)).cwiseAbs().maxCoeff());
    }
    return {sa <= 1e-10 && min_eig >= -1e-10 && inv <= 1e-10,
            "selfadjoint " + fmt(sa) + ", min eig " + fmt(min_eig) + ", inverse " + fmt(inv)};
}

Outcome c7_lax() {
    double worst = -INFINITY, max_mass = 0.0;
    int violations = 0;
    for (std::uint64_t i = 0; i < 500; ++i) {
        const int n = 2 + static_cast<int>(i % 15);
        const auto op = gen::random_g2_selfadjoint_l1(seed_for(7, i), n);
        const Matrix& g2 = op.triple().g2();
        max_mass = std::max(max_mass, op.triple().t().sum());
        const Matrix a = op.matrix();
        if ((g2 * a - (g2 * a).transpose()).cwiseAbs().maxCoeff() > 1e-10 * (g2 * a).cwiseAbs().maxCoeff()) ++violations;
        const double ng2 = spectral_norm(sym_sqrt(g2) * a * sym_inv_sqrt(g2));
        const double nl1 = a.cwiseAbs().colwise().sum().maxCoeff();
        worst = std::max(worst, ng2 - nl1);
        if (ng2 > nl1 + 1e-10) ++violations;
    }
    return {violations == 0 && max_mass <= 1.0 + 1e-12,
            "max ||A||_G2 - ||A||_l1 " + fmt(worst) + ", max sum t " + fmt(max_mass) + ", " +
                std::to_string(violations) + " violations"};
}

Outcome c8_counterexample() {
    double worst = 0.0;
    bool norms = true;
    for (int n : {1, 4, 64, 2048}) {
        const auto r = ell1_counterexample(n);
        worst = std::max(worst, std::abs(r.x_norm_l2 - 1.0 / std::sqrt(n)));
        worst = std::max(worst, std::abs(r.tx_minus_e1_l2 - std::sqrt(n - 1.0) / n));
        const double t1 = ell1_shift_operator(n).cwiseAbs().colwise().sum().maxCoeff();
        const double expected = n == 1 ? 1.0 : 2.0;
        norms = norms && t1 == expected && r.t_norm_l1 == expected;
    }
    return {worst <= 1e-12 && norms, "closed-form gap " + fmt(worst) + (norms ? ", ||T||_l1 = 2" : ", ||T||_l1 wrong")};
}

Outcome c9_polar() {
    double polar = 0.0, recon = 0.0, iso = 0.0;
    std::uint64_t i = 0;
    for (const auto& op : operators_200(9)) {
        const Matrix& a = op.matrix();
        const auto pkg = spectral_package(op);
        polar = std::max(polar, (a - pkg.polar.w * pkg.polar.r).norm() / a.norm());
        Rng rng(seed_for(9, 1000 + i++));
        for (int k = 0; k < 10; ++k) {
            const Vector x = rng.normal_vector(op.dimension());
            recon = std::max(recon, (reconstruct(op, x) - a * x).norm() / (a.norm() * x.norm()));
            const Vector z = pkg.polar.r * rng.normal_vector(op.dimension());
            const double n1 = gnorm(z, op.triple().g1());
            if (n1 > 0) iso = std::max(iso, std::abs(gnorm(pkg.polar.w * z, op.triple().g2()) - n1) / n1);
        }
    }
    return {polar <= 1e-10 && recon <= 1e-10 && iso <= 1e-9,
            "polar " + fmt(polar) + ", reconstruct " + fmt(recon) + ", isometry " + fmt(iso)};
}

Outcome c10_calculus() {
    double id = 0.0, sq = 0.0, blocks = 0.0;
    for (std::uint64_t i = 0; i < 50; ++i) {
        const auto op = gen::random_operator(seed_for(10, i), static_cast<int>(i % gen::kModelKinds), 2, 12);
        const auto pkg = spectral_package(op);
        Rng rng(seed_for(10, 1000 + i));
        const Vector x = rng.normal_vector(op.dimension());
        const Matrix& a = op.matrix();
        const Matrix wr2 = pkg.polar.w * pkg.polar.r * pkg.polar.r;
        id = std::max(id, (functional_calculus(pkg, ScalarFunction::parse("identity"), x) - a * x).norm() /
                              (a.norm() * x.norm()));
        sq = std::max(sq, (functional_calculus(pkg, ScalarFunction::parse("square"), x) - wr2 * x).norm() /
                              (std::max(wr2.norm(), 1e-300) * x.norm()));
    }
    for (std::uint64_t i = 0; i < 20; ++i) {
        Rng rng(seed_for(10, 5000 + i));
        BlockOperator b(2);
        Matrix big(8, 8);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                const Matrix m = rng.normal_matrix(4, 4);
                big.block(4 * r, 4 * c, 4, 4) = m;
                b[r].push_back(OperatorOnB::hilbert(m));
            }
        const Vector x = rng.normal_vector(8);
        blocks = std::max(blocks, (block_spectral(b, x) - big * x).norm() / (big.norm() * x.norm()));
    }
    return {id <= 1e-10 && sq <= 1e-10 && blocks <= 1e-10,
            "identity " + fmt(id) + ", square " + fmt(sq) + ", blocks " + fmt(blocks)};
}

Outcome c11_schatten() {
    double gap = 0.0, oracle = 0.0;
    for (int kind = 0; kind < gen::kModelKinds; ++kind) {
        for (std::uint64_t i = 0; i < 200; ++i) {
            const auto op = gen::random_operator(seed_for(11, 1000 * kind + i), kind, 2, 16);
            const Matrix& g2 = op.triple().g2();
            const Vector sv = Eigen::JacobiSVD<Matrix>(sym_sqrt(g2) * op.matrix() * sym_inv_sqrt(g2)).singularValues();
            for (double p : {1.0, 2.0, 3.0, 4.0}) {
                const double h2 = schatten_norm(op, p, SchattenMode::H2);
                const double b = schatten_norm(op, p, SchattenMode::B);
                const double direct = std::pow(sv.array().pow(p).sum(), 1.0 / p);
                gap = std::max(gap, std::abs(b - h2) / h2);
                oracle = std::max(oracle, std::abs(h2 - direct) / direct);
            }
        }
    }
    return {gap <= 1e-8 && oracle <= 1e-8, "B vs H2 " + fmt(gap) + ", H2 vs direct SVD " + fmt(oracle)};
}

Outcome c12_eigen_inequalities() {
    const std::vector<std::function<double(double)>> phis = {
        [](double t) { return t; }, [](double t) { return t * t; }, [](double t) { return std::expm1(t); }};
    const std::vector<MonotoneMap> maps = {MonotoneMap::linear(), MonotoneMap::square(), MonotoneMap::expm1()};
    double weyl = INFINITY, horn = INFINITY, lalesco = INFINITY, lidskii = 0.0, agreement = 0.0;
    for (std::uint64_t i = 0; i < 500; ++i) {
        const auto a1 = gen::random_operator(seed_for(12, i), static_cast<int>(i % gen::kModelKinds), 8, 8);
        Rng rng(seed_for(12, 1000 + i));
        const auto a2 = a1.with_matrix(rng.normal_matrix(8, 8) / std::sqrt(8.0));
        const Matrix& g2 = a1.triple().g2();
        const Matrix s = sym_sqrt(g2), si = sym_inv_sqrt(g2);
        const Vector mu1 = Eigen::JacobiSVD<Matrix>(s * a1.matrix() * si).singularValues();
        const Vector mu2 = Eigen::JacobiSVD<Matrix>(s * a2.matrix() * si).singularValues();
        auto moduli = [](const Matrix& m) {
            Eigen::EigenSolver<Matrix> es(m, false);
            std::vector<double> out;
            for (Eigen::Index k = 0; k < m.rows(); ++k) out.push_back(std::abs(es.eigenvalues()(k)));
            std::sort(out.rbegin(), out.rend());
            return out;
        };
        const auto l1 = moduli(a1.matrix());
        const auto l12 = moduli(a1.matrix() * a2.matrix());
        for (std::size_t f = 0; f < phis.size(); ++f) {
            double wl = 0, wr = 0, hl = 0, hr = 0;
            for (int k = 0; k < 8; ++k) {
                wl += phis[f](l1[k]);
                wr += phis[f](mu1(k));
                hl += phis[f](l12[k]);
                hr += phis[f](mu1(k) * mu2(k));
                // partial sums must hold too
                weyl = std::min(weyl, (wr - wl) / std::max(1.0, wr));
                horn = std::min(horn, (hr - hl) / std::max(1.0, hr));
            }
            const auto rep = weyl_horn_report(a1, a2, maps[f]);
            agreement = std::max(agreement, std::abs(rep.weyl_lhs - wl) / std::max(1.0, wl));
            agreement = std::max(agreement, std::abs(rep.horn_rhs - hr) / std::max(1.0, hr));
        }
        double abs_sum = 0.0;
        for (double m : l1) abs_sum += m;
        lalesco = std::min(lalesco, (mu1.sum() - abs_sum) / std::max(1.0, mu1.sum()));
        const auto ll = lalesco_lidskii_report(a1);
        Eigen::EigenSolver<Matrix> es(a1.matrix(), false);
        const std::complex<double> eig_sum = es.eigenvalues().sum();
        const double tr = a1.matrix().trace();
        lidskii = std::max(lidskii, std::abs(eig_sum - tr) / (1.0 + std::abs(tr)));
        lidskii = std::max(lidskii, ll.lidskii_residual);
        lalesco = std::min(lalesco, ll.lalesco_slack);
    }
    return {weyl >= -1e-10 && horn >= -1e-10 && lalesco >= -1e-10 && lidskii <= 1e-8 && agreement <= 1e-8,
            "min slack weyl " + fmt(weyl) + ", horn " + fmt(horn) + ", lalesco " + fmt(lalesco) + "; lidskii " +
                fmt(lidskii) + "; library vs oracle " + fmt(agreement)};
}

Outcome c13_poincare() {
    DecayEstimate unit;
    unit.m = 1.0;
    unit.mu = 1.0;
    const auto w = contraction_window(unit, 1.0);
    const double e1 = std::exp(-1.0);
    const double window_err = std::max(std::abs(w.t - 1.0), std::abs(w.r - e1));
    const double c_err = std::abs(poincare_constant(w) - 1.0 / (1.0 - e1));

    int operators = 0, violations = 0, skipped = 0;
    double worst = INFINITY, c_formula = 0.0;
    for (std::uint64_t i = 0; operators < 50 && i < 500; ++i) {
        const auto op = gen::random_operator(seed_for(13, i), static_cast<int>(i % gen::kModelKinds), 2, 12);
        PoincareReport rep;
        try {
            rep = poincare_verify(op, 1000, 1.0, seed_for(13, 1000 + i));
        } catch (const SpectralGapError&) {
            ++skipped;
            continue;
        }
        ++operators;
        const double mu = rep.decay.mu, m = rep.decay.m;
        const double t = (std::log(m) + 1.0) / mu;
        const double c = t / (1.0 - m * std::exp(-mu * t));
        c_formula = std::max(c_formula, std::abs(rep.c - c) / c);
        const Matrix r = polar_decompose(op).r;
        const Matrix& g1 = op.triple().g1();
        Rng rng(seed_for(13, 5000 + i));
        for (int k = 0; k < 1000; ++k) {
            const Vector u = rng.normal_vector(op.dimension());
            const double ratio = c * gnorm(r * u, g1) / gnorm(u, g1);
            worst = std::min(worst, ratio);
            if (ratio < 1.0 - 1e-9) ++violations;
        }
        violations += rep.violations;
    }
    return {window_err <= 1e-14 && c_err <= 1e-12 && operators == 50 && violations == 0 && c_formula <= 1e-12,
            "window " + fmt(window_err) + ", c " + fmt(c_err) + ", " + std::to_string(operators) + " operators (" +
                std::to_string(skipped) + " without gap), " + std::to_string(violations) + " violations, min c||Ru||/||u|| " +
                fmt(worst)};
}

Outcome c14_yosida() {
    const Matrix a = Matrix::Constant(1, 1, -1.0);
    double scalar = 0.0;
    for (double lam : {1.0, 10.0, 100.0})
        scalar = std::max(scalar, std::abs(spectral_norm(yosida_approximant(a, lam) - a) - 1.0 / (lam + 1.0)));
    int improved = 0;
    for (std::uint64_t i = 0; i < 50; ++i) {
        const Matrix s = gen::random_stable_matrix(seed_for(14, i), 2 + static_cast<int>(i % 10));
        const double e2 = spectral_norm(yosida_approximant(s, 1e2) - s);
        const double e3 = spectral_norm(yosida_approximant(s, 1e3) - s);
        if (e3 < e2) ++improved;
    }
    return {scalar <= 1e-12 && improved == 50, "scalar error " + fmt(scalar) + ", " + std::to_string(improved) + "/50 improve"};
}

Outcome c15_determinism() {
    const auto a = testing::run_cli("suite --seed 7");
    const auto b = testing::run_cli("suite --seed 7");
    const bool ok = a.exit_code == 0 && b.exit_code == 0 && !a.out.empty() && a.out == b.out;
    return {ok, "exit codes " + std::to_string(a.exit_code) + "/" + std::to_string(b.exit_code) + ", " +
                    std::to_string(a.out.size()) + " bytes, " + (a.out == b.out ? "identical" : "different")};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"cube_order", c1_cube_order},         {"ks_embedding", c2_ks_embedding},
        {"dirac", c3_dirac},                   {"triple", c4_triple},
        {"adjoint", c5_adjoint},               {"ata", c6_ata},
        {"lax", c7_lax},                       {"counterexample", c8_counterexample},
        {"polar", c9_polar},                   {"calculus", c10_calculus},
        {"schatten", c11_schatten},            {"eigen_inequalities", c12_eigen_inequalities},
        {"poincare", c13_poincare},            {"yosida", c14_yosida},
        {"determinism", c15_determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.passed) ++failed;
        std::printf("%s %2zu %-18s %s [%.2fs]\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
