#include "gkt/adjoint.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include <unsupported/Eigen/MatrixFunctions>

#include "gkt/errors.hpp"
#include "gkt/metric.hpp"
#include "gkt/random.hpp"

namespace gkt {

OperatorOnB::OperatorOnB(Matrix a, BanachModel model, std::shared_ptr<const GKTriple> triple)
    : a_(std::move(a)), model_(std::move(model)), triple_(std::move(triple)) {
    if (!triple_) throw InvalidArgument("operator needs a triple");
    if (a_.rows() != a_.cols()) throw InvalidArgument("operator matrix must be square");
    if (a_.rows() != model_.dimension() || a_.rows() != triple_->dimension())
        throw InvalidArgument("operator, model and triple dimensions disagree");
    if (!a_.allFinite()) throw InvalidArgument("operator matrix has non-finite entries");
}

OperatorOnB OperatorOnB::hilbert(Matrix a) {
    const int n = static_cast<int>(a.rows());
    return OperatorOnB(std::move(a), BanachModel::l2(n), std::make_shared<const GKTriple>(GKTriple::hilbert(n)));
}

Matrix star_with(const Matrix& x, const Matrix& ga, const Matrix& gb) {
    Eigen::LLT<Matrix> llt(ga);
    if (llt.info() != Eigen::Success)
        throw InvariantViolation("Gram matrix lost positive definiteness while forming an adjoint");
    return llt.solve(x.transpose() * gb);
}

OperatorOnB banach_adjoint(const OperatorOnB& op) {
    const auto& t = op.triple();
    return op.with_matrix(star_with(op.matrix(), t.g1(), t.g2()));
}

double defining_relation_residual(const OperatorOnB& op, const Matrix& adjoint, const Vector& x, const Vector& v) {
    const auto& t = op.triple();
    const double lhs = t.inner1(x, adjoint * v);
    const double rhs = t.inner2(op.matrix() * x, v);
    const double scale = op.matrix().norm() * t.g2().norm() * x.norm() * v.norm();
    if (scale == 0.0) return std::abs(lhs - rhs);
    return std::abs(lhs - rhs) / scale;
}

double max_defining_relation_residual(const OperatorOnB& op, std::uint64_t seed, int pairs) {
    const Matrix adj = banach_adjoint(op).matrix();
    Rng rng(seed);
    double worst = 0.0;
    for (int k = 0; k < pairs; ++k) {
        const Vector x = rng.normal_vector(op.dimension());
        const Vector v = rng.normal_vector(op.dimension());
        worst = std::max(worst, defining_relation_residual(op, adj, x, v));
    }
    return worst;
}

bool AtaReport::asserted_hold() const noexcept {
    return g1_selfadjoint_residual <= 1e-10 && min_positivity >= -1e-12 && min_eig >= -1e-10;
}

AtaReport ata_analysis(const OperatorOnB& op, std::uint64_t seed, int samples) {
    const auto& t = op.triple();
    const Matrix c = banach_adjoint(op).matrix() * op.matrix();
    AtaReport r;
    r.g1_selfadjoint_residual = metric::selfadjoint_residual(c, t.g1());
    const Vector eig = metric::eigen(c, t.g1()).values;
    r.min_eig = eig.minCoeff();
    const double cnorm = c.norm();
    r.alt_star_gap = cnorm > 0.0 ? (star_with(c, t.g1(), t.g2()) - c).norm() / cnorm : 0.0;

    Rng rng(seed);
    r.min_positivity = std::numeric_limits<double>::infinity();
    r.accretivity_min = std::numeric_limits<double>::infinity();
    for (int k = 0; k < samples; ++k) {
        const Vector x = rng.normal_vector(op.dimension());
        r.min_positivity = std::min(r.min_positivity, t.inner1(x, c * x) / t.inner1(x, x));
        const Vector fs = steadman_duality(x, t.g2(), op.model());
        const double nb = op.model().norm(x);
        r.accretivity_min = std::min(r.accretivity_min, fs.dot(c * x) / (nb * nb));
    }
    return r;
}

Matrix inverse_i_plus_ata(const OperatorOnB& op) {
    const auto& t = op.triple();
    const Eigen::Index n = op.dimension();
    // I + A*A = G1^{-1} (G1 + A^T G2 A), and the bracket is symmetric positive definite.
    const Matrix spd = t.g1() + op.matrix().transpose() * t.g2() * op.matrix();
    Eigen::LLT<Matrix> llt(0.5 * (spd + spd.transpose()));
    const double cond = metric::condition_spd(spd);
    if (llt.info() != Eigen::Success) throw ConditioningError("I + A*A could not be factored", cond);
    const Matrix x = llt.solve(t.g1());
    const Matrix c = banach_adjoint(op).matrix() * op.matrix();
    const Matrix identity = Matrix::Identity(n, n);
    const double residual = ((identity + c) * x - identity).cwiseAbs().maxCoeff();
    if (!(residual <= 1e-10))
        throw ConditioningError("(I + A*A)^{-1} residual " + std::to_string(residual) + " exceeds 1e-10", cond);
    return x;
}

namespace {

Vector signed_power(const Vector& y, double e) {
    Vector out(y.size());
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        const double a = std::abs(y[i]);
        out[i] = a == 0.0 ? 0.0 : std::copysign(std::pow(a, e), y[i]);
    }
    return out;
}

}  // namespace

double banach_operator_norm(const Matrix& a, const BanachModel& model, bool* exact, std::uint64_t seed) {
    if (exact) *exact = true;
    switch (model.kind()) {
        case NormKind::L1: return a.cwiseAbs().colwise().sum().maxCoeff();
        case NormKind::Sup: return a.cwiseAbs().rowwise().sum().maxCoeff();
        case NormKind::L2: return Eigen::JacobiSVD<Matrix>(a).singularValues()(0);
        case NormKind::Lp: break;
    }
    if (exact) *exact = false;
    const Eigen::Index n = a.cols();
    const double p = model.exponent();
    const double q = model.dual_exponent();
    Rng rng(seed);
    double best = 0.0;
    Vector best_x = Vector::Unit(n, 0);
    auto consider = [&](const Vector& x) {
        const double nx = model.norm(x);
        if (nx == 0.0) return;
        const double r = model.norm(a * x) / nx;
        if (r > best) {
            best = r;
            best_x = x / nx;
        }
    };
    for (Eigen::Index i = 0; i < n; ++i) consider(Vector::Unit(n, i));
    for (int s = 0; s < 10000; ++s) {
        Vector x(n);
        if (s % 2 == 0) {
            for (Eigen::Index i = 0; i < n; ++i) x[i] = (rng.next() & 1U) ? 1.0 : -1.0;
        } else {
            x = rng.normal_vector(n);
        }
        consider(x);
    }
    // Power-type ascent on ||Ax||_p / ||x||_p from the best sample.
    Vector x = best_x;
    for (int it = 0; it < 50; ++it) {
        const Vector z = a.transpose() * signed_power(a * x, p - 1.0);
        if (z.norm() == 0.0) break;
        x = signed_power(z, q - 1.0);
        consider(x);
    }
    return best;
}

double embedding_constant(const GKTriple& triple, const BanachModel& model, std::uint64_t seed, int samples) {
    const Matrix& g2 = triple.g2();
    const Eigen::Index n = g2.rows();
    switch (model.kind()) {
        case NormKind::L1:  // extreme points of the l1 ball are +-e_i
            return std::sqrt(g2.diagonal().maxCoeff());
        case NormKind::L2:
            return std::sqrt(Eigen::SelfAdjointEigenSolver<Matrix>(g2, Eigen::EigenvaluesOnly).eigenvalues().maxCoeff());
        case NormKind::Sup:
            if (n <= 20) {  // extreme points of the cube are the sign vectors
                double best = 0.0;
                Vector x(n);
                for (std::uint64_t mask = 0; mask < (1ULL << (n - 1)); ++mask) {
                    for (Eigen::Index i = 0; i < n; ++i) x[i] = (i == 0 || ((mask >> (i - 1)) & 1ULL)) ? 1.0 : -1.0;
                    best = std::max(best, x.dot(g2 * x));
                }
                return std::sqrt(best);
            }
            break;
        case NormKind::Lp: break;
    }
    Rng rng(seed);
    double best = 0.0;
    for (int s = 0; s < samples; ++s) {
        const Vector x = rng.normal_vector(n);
        best = std::max(best, triple.norm2(x) / model.norm(x));
    }
    return best;
}

LaxReport lax_bound(const OperatorOnB& op) {
    const auto& t = op.triple();
    LaxReport r;
    r.norm_b = banach_operator_norm(op.matrix(), op.model(), &r.norm_b_exact);
    r.norm_g2 = metric::operator_norm(op.matrix(), t.g2());
    r.g2_selfadjoint = metric::selfadjoint_residual(op.matrix(), t.g2()) <= 1e-10;
    r.embedding_constant_le_one = embedding_constant(t, op.model()) <= 1.0 + 1e-12;
    r.asserted = r.g2_selfadjoint && r.embedding_constant_le_one;
    r.holds = r.norm_g2 <= r.norm_b + 1e-10;
    return r;
}

Matrix ell1_shift_operator(int n) {
    if (n < 1) throw InvalidArgument("counterexample needs n >= 1");
    Matrix t = Matrix::Identity(n, n);
    for (int k = 1; k < n; ++k) t(0, k) = 1.0;
    return t;
}

CounterexampleReport ell1_counterexample(int n) {
    const Matrix t = ell1_shift_operator(n);
    const Vector x = Vector::Constant(n, 1.0 / n);
    const Vector tx = t * x;
    CounterexampleReport r;
    r.n = n;
    r.x_norm_l2 = x.norm();
    r.x_norm_l1 = x.cwiseAbs().sum();
    r.tx_minus_e1_l2 = (tx - Vector::Unit(n, 0)).norm();
    r.t_norm_l1 = banach_operator_norm(t, BanachModel::l1(n));
    r.expected_x_norm_l2 = 1.0 / std::sqrt(static_cast<double>(n));
    r.expected_tx_minus_e1_l2 = std::sqrt(static_cast<double>(n - 1)) / n;
    return r;
}

Matrix yosida_approximant(const Matrix& a, double lambda) {
    if (a.rows() != a.cols()) throw InvalidArgument("Yosida approximant needs a square matrix");
    const Eigen::Index n = a.rows();
    const Matrix shifted = lambda * Matrix::Identity(n, n) - a;
    Eigen::JacobiSVD<Matrix> svd(shifted);
    const auto& sv = svd.singularValues();
    const double cond = sv(n - 1) > 0.0 ? sv(0) / sv(n - 1) : std::numeric_limits<double>::infinity();
    if (!(cond < 1e12)) throw ResolventError("lambda = " + std::to_string(lambda) + " is in the spectrum (condition " + std::to_string(cond) + ")");
    return lambda * a * shifted.partialPivLu().inverse();
}

NaturalSelfadjointReport natural_selfadjoint_check(const OperatorOnB& op, double tol, std::vector<double> times) {
    const auto& t = op.triple();
    NaturalSelfadjointReport r;
    const Matrix& a = op.matrix();
    const double anorm = a.norm();
    const Matrix adj = banach_adjoint(op).matrix();
    r.adjoint_gap = anorm > 0.0 ? (a - adj).norm() / anorm : 0.0;
    r.naturally_selfadjoint = r.adjoint_gap <= tol;
    r.times = std::move(times);
    const CMatrix ac = a.cast<std::complex<double>>();
    for (double s : r.times) {
        for (double sign : {1.0, -1.0}) {
            const CMatrix e = (std::complex<double>(0.0, sign * s) * ac).exp();
            r.max_group_norm = std::max(r.max_group_norm, metric::operator_norm(e, t.g2()));
        }
    }
    r.group_isometric = r.max_group_norm <= 1.0 + 1e-8;
    r.single_metric = t.single_metric();
    r.agreement = r.naturally_selfadjoint == r.group_isometric;
    return r;
}

double spectrum_preservation_gap(const OperatorOnB& op) {
    const auto& g2 = op.triple().g2();
    const Matrix ext = metric::sqrt_spd(g2) * op.matrix() * metric::inv_sqrt_spd(g2);
    const CVector e1 = Eigen::EigenSolver<Matrix>(op.matrix(), false).eigenvalues();
    const CVector e2 = Eigen::EigenSolver<Matrix>(ext, false).eigenvalues();
    std::vector<bool> used(static_cast<std::size_t>(e2.size()), false);
    double worst = 0.0;
    for (Eigen::Index i = 0; i < e1.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        Eigen::Index arg = 0;
        for (Eigen::Index j = 0; j < e2.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(e1[i] - e2[j]);
            if (d < best) {
                best = d;
                arg = j;
            }
        }
        used[arg] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace gkt
