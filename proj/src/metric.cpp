#include "gkt/metric.hpp"

#include <algorithm>
#include <cmath>

#include "gkt/errors.hpp"

namespace gkt::metric {

namespace {

Matrix symmetrize(const Matrix& s) { return 0.5 * (s + s.transpose()); }

}  // namespace

SelfAdjointEigen pencil_eigen(const Matrix& s, const Matrix& g) {
    Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> solver(symmetrize(s), symmetrize(g),
                                                            Eigen::ComputeEigenvectors | Eigen::Ax_lBx);
    if (solver.info() != Eigen::Success) {
        throw ConditioningError("generalized symmetric eigensolver failed (metric not positive definite?)",
                                condition_spd(g));
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

SelfAdjointEigen eigen(const Matrix& x, const Matrix& g) { return pencil_eigen(g * x, g); }

Matrix power(const Matrix& x, const Matrix& g, double s) {
    auto [values, vectors] = eigen(x, g);
    Vector powered(values.size());
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        const double v = std::max(values[i], 0.0);
        powered[i] = std::pow(v, s);
    }
    // X = V diag V^T G, since V^{-1} = V^T G.
    return vectors * powered.asDiagonal() * vectors.transpose() * g;
}

double operator_norm(const Matrix& x, const Matrix& g) {
    const Matrix gram = x.transpose() * g * x;
    const auto eig = pencil_eigen(gram, g);
    return std::sqrt(std::max(eig.values.maxCoeff(), 0.0));
}

double operator_norm(const CMatrix& x, const Matrix& g) {
    const CMatrix conj = sqrt_spd(g).cast<std::complex<double>>() * x * inv_sqrt_spd(g).cast<std::complex<double>>();
    Eigen::JacobiSVD<CMatrix> svd(conj);
    return svd.singularValues()(0);
}

double norm(const Vector& x, const Matrix& g) { return std::sqrt(std::max(inner(x, x, g), 0.0)); }

double inner(const Vector& x, const Vector& y, const Matrix& g) { return x.dot(g * y); }

double selfadjoint_residual(const Matrix& x, const Matrix& g) {
    const Matrix gx = g * x;
    const double scale = gx.norm();
    if (scale == 0.0) return 0.0;
    return (gx - gx.transpose()).norm() / scale;
}

Matrix sqrt_spd(const Matrix& g) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetrize(g));
    return solver.operatorSqrt();
}

Matrix inv_sqrt_spd(const Matrix& g) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetrize(g));
    return solver.operatorInverseSqrt();
}

double condition_spd(const Matrix& g) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetrize(g), Eigen::EigenvaluesOnly);
    const double lo = solver.eigenvalues().minCoeff();
    const double hi = solver.eigenvalues().maxCoeff();
    if (lo <= 0.0) return std::numeric_limits<double>::infinity();
    return hi / lo;
}

double symmetry_error(const Matrix& g) {
    const double scale = g.cwiseAbs().maxCoeff();
    if (scale == 0.0) return 0.0;
    return (g - g.transpose()).cwiseAbs().maxCoeff() / scale;
}

}  // namespace gkt::metric
