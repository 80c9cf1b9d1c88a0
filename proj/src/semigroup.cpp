#include "gkt/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "gkt/errors.hpp"
#include "gkt/metric.hpp"
#include "gkt/random.hpp"
#include "gkt/spectral.hpp"

namespace gkt {

Matrix semigroup_step(const Matrix& r, double t) {
    if (!(t >= 0.0)) throw InvalidArgument("semigroup time must be >= 0");
    if (t == 0.0) return Matrix::Identity(r.rows(), r.cols());
    return Matrix(-t * r).exp();
}

DecayEstimate decay_constants(const Matrix& r, const Matrix& g) {
    if (r.rows() != r.cols() || r.rows() != g.rows()) throw InvalidArgument("generator and metric shapes disagree");
    Eigen::EigenSolver<Matrix> es(r, true);
    if (es.info() != Eigen::Success) throw ConditioningError("eigenvalue iteration did not converge", 0.0);
    DecayEstimate est;
    est.mu = es.eigenvalues().real().minCoeff();
    const double scale = std::max(1.0, r.norm());
    if (!(est.mu > 1e-12 * scale))
        throw SpectralGapError("spectrum reaches zero: min Re eig(R) = " + std::to_string(est.mu));

    if (metric::selfadjoint_residual(r, g) <= 1e-10) {
        est.m = 1.0;
    } else {
        CMatrix v = es.eigenvectors();
        const CMatrix gc = g.cast<std::complex<double>>();
        for (Eigen::Index j = 0; j < v.cols(); ++j) {
            const double nj = std::sqrt(std::abs((v.col(j).adjoint() * gc * v.col(j))(0, 0)));
            v.col(j) /= nj;
        }
        const CMatrix w = metric::sqrt_spd(g).cast<std::complex<double>>() * v;
        const Vector sv = Eigen::JacobiSVD<CMatrix>(w).singularValues();
        const double cond = sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1) : std::numeric_limits<double>::infinity();
        if (!(cond < 1e12)) throw ConditioningError("generator is not diagonalisable to working precision", cond);
        est.m = std::max(1.0, cond);
    }

    const double horizon = 10.0 / est.mu;
    const int steps = std::clamp(static_cast<int>(std::ceil(horizon / 0.1)), 1, 200);
    const double dt = horizon / steps;
    est.grid_points = steps + 1;
    for (int k = 0; k <= steps; ++k) {
        const double t = k * dt;
        const double bound = est.m * std::exp(-est.mu * t);
        est.worst_bound_ratio = std::max(est.worst_bound_ratio, metric::operator_norm(semigroup_step(r, t), g) / bound);
    }
    return est;
}

ContractionWindow contraction_window(const DecayEstimate& est, double slack) {
    if (!(slack > 0.0)) throw InvalidArgument("contraction slack must be > 0");
    if (!(est.mu > 0.0) || !(est.m >= 1.0)) throw InvalidArgument("decay estimate needs mu > 0 and M >= 1");
    ContractionWindow w;
    w.t = (std::log(est.m) + slack) / est.mu;
    w.r = est.m * std::exp(-est.mu * w.t);
    return w;
}

double poincare_constant(const ContractionWindow& w) {
    if (!(w.t > 0.0) || !(w.r >= 0.0 && w.r < 1.0)) throw InvalidArgument("window needs T > 0 and 0 <= r < 1");
    return w.t / (1.0 - w.r);
}

DecayIntegral decay_integral(const Matrix& r, const Matrix& g, const DecayEstimate& est, int points) {
    if (points < 2) throw InvalidArgument("decay integral needs >= 2 points");
    DecayIntegral d;
    d.horizon = 20.0 / est.mu;
    const double dt = d.horizon / (points - 1);
    double prev = 1.0;
    for (int k = 1; k < points; ++k) {
        const double cur = metric::operator_norm(semigroup_step(r, k * dt), g);
        d.integral += 0.5 * dt * (prev + cur);
        prev = cur;
    }
    d.finite = std::isfinite(d.integral);
    return d;
}

namespace {

struct PoincareSample {
    double u1, ru1, au2, ub, aub;
};

}  // namespace

PoincareReport poincare_verify(const OperatorOnB& op, int samples, double slack, std::uint64_t seed) {
    if (samples < 1) throw InvalidArgument("sample count must be >= 1");
    const auto& t = op.triple();
    const Matrix& a = op.matrix();
    const Matrix r = polar_decompose(op).r;

    PoincareReport rep;
    rep.slack = slack;
    rep.samples = samples;
    rep.decay = decay_constants(r, t.g1());
    rep.window = contraction_window(rep.decay, slack);
    rep.c = poincare_constant(rep.window);
    rep.single_metric = t.single_metric();
    rep.integral = decay_integral(r, t.g1(), rep.decay);

    const int n = op.dimension();
    std::vector<PoincareSample> s(static_cast<std::size_t>(samples));
#pragma omp parallel for schedule(static)
    for (int i = 0; i < samples; ++i) {
        Rng rng(derive_seed(seed, 0, static_cast<std::uint64_t>(i)));
        const Vector u = rng.normal_vector(n);
        const Vector au = a * u;
        s[static_cast<std::size_t>(i)] = {t.norm1(u), t.norm1(r * u), t.norm2(au), op.model().norm(u),
                                          op.model().norm(au)};
    }

    rep.worst_ratio = std::numeric_limits<double>::infinity();
    rep.spectral_gap_bound = std::numeric_limits<double>::infinity();
    rep.observed_b_ratio = std::numeric_limits<double>::infinity();
    for (const auto& x : s) {
        const double ratio = rep.c * x.ru1 / x.u1;
        rep.worst_ratio = std::min(rep.worst_ratio, ratio);
        if (ratio < 1.0 - 1e-9) ++rep.violations;
        rep.spectral_gap_bound = std::min(rep.spectral_gap_bound, x.ru1 / (rep.decay.mu * x.u1));
        if (x.ru1 > 0.0) rep.max_isometry_gap = std::max(rep.max_isometry_gap, std::abs(x.ru1 - x.au2) / x.ru1);
        const double b_ratio = rep.c * x.aub / x.ub;
        rep.observed_b_ratio = std::min(rep.observed_b_ratio, b_ratio);
        if (b_ratio < 1.0 - 1e-9) ++rep.observed_b_violations;
    }
    return rep;
}

RelativeBoundReport relative_bound_check(const OperatorOnB& b_op, const OperatorOnB& a_op, double a, double b,
                                         int samples, double slack, std::uint64_t seed) {
    if (!(a >= 0.0) || !(b >= 0.0)) throw InvalidArgument("relative-bound constants must be >= 0");
    if (samples < 1) throw InvalidArgument("sample count must be >= 1");
    if (b_op.dimension() != a_op.dimension()) throw InvalidArgument("operators differ in dimension");
    const auto& t = a_op.triple();
    const Matrix r = polar_decompose(a_op).r;
    RelativeBoundReport rep;
    rep.a = a;
    rep.b = b;
    rep.samples = samples;
    rep.c = poincare_constant(contraction_window(decay_constants(r, t.g1()), slack));
    rep.c_tilde = a * rep.c + b;
    rep.premise_worst = -std::numeric_limits<double>::infinity();
    Rng rng(seed);
    for (int i = 0; i < samples; ++i) {
        const Vector u = rng.normal_vector(a_op.dimension());
        const double bu = t.norm2(b_op.matrix() * u);
        const double au = t.norm2(a_op.matrix() * u);
        const double u1 = t.norm1(u);
        rep.premise_worst = std::max(rep.premise_worst, (bu - a * u1 - b * au) / u1);
        const double denom = rep.c_tilde * au;
        const double ratio = denom > 0.0 ? bu / denom : (bu == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
        rep.consolidated_worst_ratio = std::max(rep.consolidated_worst_ratio, ratio);
    }
    rep.premise_holds = rep.premise_worst <= 1e-10;
    rep.consolidated_holds = rep.consolidated_worst_ratio <= 1.0 + 1e-9;
    return rep;
}

}  // namespace gkt
