#include "gkt/schatten.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include "gkt/embedding.hpp"
#include "gkt/errors.hpp"
#include "gkt/metric.hpp"

namespace gkt {

SingularSpectrum singular_values(const OperatorOnB& op) {
    const Matrix& g2 = op.triple().g2();
    const Matrix& a = op.matrix();
    const auto pe = metric::pencil_eigen(a.transpose() * g2 * a, g2);
    const Eigen::Index n = pe.values.size();
    SingularSpectrum s;
    s.mu.resize(n);
    s.right.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        s.mu[i] = std::sqrt(std::max(pe.values[n - 1 - i], 0.0));
        s.right.col(i) = pe.vectors.col(n - 1 - i);
    }
    return s;
}

Vector schatten_b_terms(const OperatorOnB& op) {
    const auto& t = op.triple();
    const Matrix& a = op.matrix();
    const Matrix hermitian_square = star_h2(a, t.g2()) * a;
    const auto s = singular_values(op);
    Vector terms(s.mu.size());
    for (Eigen::Index i = 0; i < terms.size(); ++i) {
        const Vector psi = s.right.col(i) / op.model().norm(s.right.col(i));
        const Vector fs = steadman_duality(psi, t.g2(), op.model());
        terms[i] = fs.dot(hermitian_square * psi);
    }
    return terms;
}

Matrix star_h2(const Matrix& a, const Matrix& g2) { return g2.llt().solve(a.transpose() * g2); }

double schatten_norm(const OperatorOnB& op, double p, SchattenMode mode) {
    if (!(p >= 1.0) || std::isinf(p)) throw InvalidArgument("Schatten exponent must lie in [1, inf)");
    Vector sq;
    if (mode == SchattenMode::H2) {
        sq = singular_values(op).mu.array().square();
    } else {
        sq = schatten_b_terms(op).cwiseMax(0.0);
    }
    const double top = sq.maxCoeff();
    if (top == 0.0) return 0.0;
    double acc = 0.0;
    for (Eigen::Index i = 0; i < sq.size(); ++i) acc += std::pow(sq[i] / top, p / 2.0);
    return std::sqrt(top) * std::pow(acc, 1.0 / p);
}

MonotoneMap MonotoneMap::linear() { return {"t", [](double t) { return t; }}; }
MonotoneMap MonotoneMap::square() { return {"t^2", [](double t) { return t * t; }}; }
MonotoneMap MonotoneMap::expm1() { return {"exp(t)-1", [](double t) { return std::expm1(t); }}; }

MonotoneMap MonotoneMap::table(std::vector<double> t, std::vector<double> v) {
    if (t.size() != v.size() || t.size() < 2) throw InvalidArgument("monotone table needs >= 2 matching nodes");
    if (t.front() != 0.0) throw InvalidArgument("monotone table must start at t = 0");
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!std::isfinite(t[i]) || !std::isfinite(v[i])) throw InvalidArgument("monotone table has non-finite node");
        if (v[i] < 0.0) throw InvalidArgument("monotone table has a negative value");
        if (i > 0 && !(t[i] > t[i - 1])) throw InvalidArgument("monotone table nodes must be strictly increasing");
        if (i > 0 && v[i] < v[i - 1]) throw InvalidArgument("monotone table values must be non-decreasing");
    }
    return {"table", [t = std::move(t), v = std::move(v)](double x) {
                auto it = std::upper_bound(t.begin(), t.end(), x);
                std::size_t hi = static_cast<std::size_t>(it - t.begin());
                hi = std::clamp<std::size_t>(hi, 1, t.size() - 1);
                const std::size_t lo = hi - 1;
                const double slope = (v[hi] - v[lo]) / (t[hi] - t[lo]);
                return v[lo] + slope * (x - t[lo]);
            }};
}

CVector eigenvalues_by_modulus(const Matrix& a) {
    Eigen::EigenSolver<Matrix> es(a, false);
    if (es.info() != Eigen::Success) throw ConditioningError("eigenvalue iteration did not converge", 0.0);
    CVector e = es.eigenvalues();
    std::vector<std::complex<double>> v(e.data(), e.data() + e.size());
    std::stable_sort(v.begin(), v.end(), [](auto x, auto y) { return std::abs(x) > std::abs(y); });
    for (Eigen::Index i = 0; i < e.size(); ++i) e[i] = v[static_cast<std::size_t>(i)];
    return e;
}

namespace {

double relative_slack(double lhs, double rhs) { return (rhs - lhs) / std::max(1.0, std::abs(rhs)); }

}  // namespace

WeylHornReport weyl_horn_report(const OperatorOnB& a1, const OperatorOnB& a2, const MonotoneMap& phi,
                                std::size_t terms) {
    if (a1.dimension() != a2.dimension()) throw InvalidArgument("Horn operands differ in dimension");
    const std::size_t n = static_cast<std::size_t>(a1.dimension());
    if (terms == 0 || terms > n) terms = n;
    const CVector l1 = eigenvalues_by_modulus(a1.matrix());
    const CVector l12 = eigenvalues_by_modulus(a1.matrix() * a2.matrix());
    const Vector mu1 = singular_values(a1).mu;
    const Vector mu2 = singular_values(a2).mu;
    WeylHornReport r;
    r.terms = terms;
    for (std::size_t i = 0; i < terms; ++i) {
        const auto k = static_cast<Eigen::Index>(i);
        r.weyl_lhs += phi(std::abs(l1[k]));
        r.weyl_rhs += phi(mu1[k]);
        r.horn_lhs += phi(std::abs(l12[k]));
        r.horn_rhs += phi(mu1[k] * mu2[k]);
    }
    r.weyl_slack = relative_slack(r.weyl_lhs, r.weyl_rhs);
    r.horn_slack = relative_slack(r.horn_lhs, r.horn_rhs);
    return r;
}

LalescoLidskiiReport lalesco_lidskii_report(const OperatorOnB& op) {
    const CVector e = eigenvalues_by_modulus(op.matrix());
    LalescoLidskiiReport r;
    r.abs_eig_sum = e.cwiseAbs().sum();
    r.mu_sum = singular_values(op).mu.sum();
    r.lalesco_slack = relative_slack(r.abs_eig_sum, r.mu_sum);
    const std::complex<double> total = e.sum();
    r.eig_sum_real = total.real();
    r.eig_sum_imag = total.imag();
    r.trace = op.matrix().trace();
    r.lidskii_residual = std::abs(total - r.trace) / (1.0 + std::abs(r.trace));
    return r;
}

double nuclear_upper_bound(const OperatorOnB& op) {
    const Matrix& g2 = op.triple().g2();
    const auto s = singular_values(op);
    double bound = 0.0;
    for (Eigen::Index i = 0; i < s.mu.size(); ++i) {
        if (s.mu[i] <= 0.0) continue;
        const Vector phi = s.right.col(i);
        const Vector psi = op.matrix() * phi / s.mu[i];
        bound += s.mu[i] * op.model().dual_norm(g2 * phi) * op.model().norm(psi);
    }
    return bound;
}

Vector finite_rank_errors(const OperatorOnB& op) {
    const Matrix& g2 = op.triple().g2();
    const Matrix& a = op.matrix();
    const auto s = singular_values(op);
    const Eigen::Index n = s.mu.size();
    Vector errors(n + 1);
    Matrix approx = Matrix::Zero(n, n);
    for (Eigen::Index k = 0; k <= n; ++k) {
        if (k > 0) {
            const Vector phi = s.right.col(k - 1);
            approx += (a * phi) * (g2 * phi).transpose();
        }
        errors[k] = metric::operator_norm(Matrix(a - approx), g2);
    }
    return errors;
}

}  // namespace gkt
