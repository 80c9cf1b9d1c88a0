#include "gkt/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gkt/errors.hpp"
#include "gkt/metric.hpp"
#include "gkt/random.hpp"

namespace gkt {

Vector duality_functional(const Vector& u, const BanachModel& model) { return model.duality_functional(u); }

Matrix build_h2(const BanachModel& model, const Matrix& family, const Vector& weights) {
    const int n = model.dimension();
    if (family.rows() != n) throw InvalidArgument("dense family rows must equal model dimension");
    if (family.cols() != weights.size()) throw InvalidArgument("one weight per dense-family vector required");
    if ((weights.array() <= 0.0).any()) throw InvalidArgument("H2 weights must be positive");
    Matrix functionals(n, family.cols());
    for (Eigen::Index m = 0; m < family.cols(); ++m) functionals.col(m) = model.duality_functional(family.col(m));

    Eigen::JacobiSVD<Matrix> svd(functionals);
    const auto& sv = svd.singularValues();
    const double tol = 1e-12 * std::max(1.0, sv(0)) * static_cast<double>(std::max<Eigen::Index>(n, family.cols()));
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) <= tol)
            throw DegeneracyError("duality functionals of the dense family are not separating (rank " +
                                      std::to_string(i) + " < " + std::to_string(n) + ")",
                                  static_cast<std::size_t>(i));
    if (sv.size() < n) throw DegeneracyError("dense family smaller than the dimension", static_cast<std::size_t>(sv.size()));

    Matrix g2 = functionals * weights.asDiagonal() * functionals.transpose();
    return 0.5 * (g2 + g2.transpose());
}

H1Parts build_h1(const Matrix& g2, const Matrix& phi, const Vector& lambda) {
    if (phi.rows() != g2.rows() || phi.cols() != lambda.size())
        throw InvalidArgument("basis and lambda sizes must match the H2 Gram matrix");
    for (Eigen::Index i = 0; i < lambda.size(); ++i)
        if (!(lambda[i] > 0.0) || !std::isfinite(lambda[i]))
            throw InvalidArgument("lambda_" + std::to_string(i + 1) + " must be positive");
    const Vector inv = lambda.cwiseInverse();
    Matrix g1 = g2 * phi * inv.asDiagonal() * phi.transpose() * g2;
    g1 = 0.5 * (g1 + g1.transpose());
    Matrix t12 = phi * lambda.asDiagonal() * phi.transpose() * g2;
    return {std::move(g1), std::move(t12)};
}

Vector default_lambda(Eigen::Index count) {
    Vector l(count);
    for (Eigen::Index i = 0; i < count; ++i) {
        const double k = static_cast<double>(i + 1);
        l[i] = 6.0 / (std::numbers::pi * std::numbers::pi * k * k);
    }
    return l;
}

Matrix g2_orthonormal_basis(const Matrix& g2, const std::optional<Matrix>& rotation) {
    Eigen::LLT<Matrix> llt(g2);
    if (llt.info() != Eigen::Success) throw ConditioningError("H2 Gram matrix is not positive definite", metric::condition_spd(g2));
    const Eigen::Index n = g2.rows();
    // Phi = L^{-T}: Phi^T G2 Phi = L^{-1} L L^T L^{-T} = I.
    Matrix phi = llt.matrixU().solve(Matrix::Identity(n, n));
    if (rotation) phi = phi * (*rotation);
    return phi;
}

GKTriple::GKTriple(Matrix g1, Matrix g2, Matrix phi, Vector lambda, Vector t)
    : g1_(std::move(g1)), g2_(std::move(g2)), phi_(std::move(phi)), lambda_(std::move(lambda)), t_(std::move(t)) {
    const Eigen::Index n = g2_.rows();
    if (n < 1 || g2_.cols() != n || g1_.rows() != n || g1_.cols() != n || phi_.rows() != n || phi_.cols() != n ||
        lambda_.size() != n)
        throw InvalidArgument("triple matrices must all be n x n with n lambdas");
    if (metric::symmetry_error(g1_) > 1e-12 || metric::symmetry_error(g2_) > 1e-12)
        throw InvalidArgument("G1 and G2 must be symmetric");
    for (const Matrix* g : {&g1_, &g2_}) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(*g, Eigen::EigenvaluesOnly);
        if (!(es.eigenvalues().minCoeff() > 0.0)) throw InvalidArgument("G1 and G2 must be positive definite");
    }
    if ((t_.array() <= 0.0).any()) throw InvalidArgument("H2 weights must be positive");
    if (t_.size() > 0 && t_.sum() > 1.0 + 1e-12) throw InvalidArgument("H2 weights must sum to at most 1");
    const double ortho = (phi_.transpose() * g2_ * phi_ - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
    if (ortho > 1e-10) throw InvalidArgument("Phi is not G2-orthonormal (error " + std::to_string(ortho) + ")");
    auto parts = build_h1(g2_, phi_, lambda_);
    const double mismatch = (parts.g1 - g1_).norm() / g1_.norm();
    if (mismatch > 1e-8) throw InvalidArgument("G1 is inconsistent with (G2, Phi, lambda)");
    t12_ = std::move(parts.t12);
}

GKTriple GKTriple::build(const BanachModel& model, const Options& options) {
    const int n = model.dimension();
    const Matrix family = model.dense_family(derive_seed(options.seed, 0x7a11));
    const Vector t = options.weights ? *options.weights : Vector::Constant(family.cols(), 1.0 / static_cast<double>(family.cols()));
    const Matrix g2 = build_h2(model, family, t);
    std::optional<Matrix> rotation;
    if (options.random_basis) {
        Rng rng(derive_seed(options.seed, 0xba515));
        rotation = rng.orthogonal(n);
    }
    const Matrix phi = g2_orthonormal_basis(g2, rotation);
    const Vector lambda = options.lambda ? *options.lambda : default_lambda(n);
    auto parts = build_h1(g2, phi, lambda);
    return GKTriple(std::move(parts.g1), g2, phi, lambda, t);
}

GKTriple GKTriple::random(const BanachModel& model, std::uint64_t seed) {
    Rng rng(derive_seed(seed, 0x7e1));
    const Eigen::Index m = 4 * model.dimension();
    Vector t(m);
    for (Eigen::Index i = 0; i < m; ++i) t[i] = rng.uniform(0.5, 1.5);
    t /= t.sum();
    Vector lambda = default_lambda(model.dimension());
    for (Eigen::Index i = 0; i < lambda.size(); ++i) lambda[i] *= rng.uniform(0.5, 1.5);
    Options o;
    o.seed = seed;
    o.weights = t;
    o.lambda = lambda;
    o.random_basis = true;
    return build(model, o);
}

GKTriple GKTriple::hilbert(int n) {
    const Matrix id = Matrix::Identity(n, n);
    return GKTriple(id, id, id, Vector::Ones(n), Vector());
}

double GKTriple::norm1(const Vector& u) const { return std::sqrt(std::max(inner1(u, u), 0.0)); }
double GKTriple::norm2(const Vector& u) const { return std::sqrt(std::max(inner2(u, u), 0.0)); }

bool GKTriple::single_metric(double tol) const {
    return (g1_ - g2_).cwiseAbs().maxCoeff() <= tol * std::max(1.0, g2_.cwiseAbs().maxCoeff());
}

TripleCheck check_triple(const GKTriple& triple) {
    TripleCheck c;
    const Eigen::Index n = triple.dimension();
    c.g1_symmetry = metric::symmetry_error(triple.g1());
    c.g2_symmetry = metric::symmetry_error(triple.g2());
    c.g1_min_eig = Eigen::SelfAdjointEigenSolver<Matrix>(triple.g1(), Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
    c.g2_min_eig = Eigen::SelfAdjointEigenSolver<Matrix>(triple.g2(), Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
    c.phi_orthonormality =
        (triple.phi().transpose() * triple.g2() * triple.phi() - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
    Vector eig = metric::eigen(triple.t12(), triple.g2()).values;
    Vector lam = triple.lambda();
    std::sort(eig.data(), eig.data() + eig.size());
    std::sort(lam.data(), lam.data() + lam.size());
    c.t12_spectrum_gap = (eig - lam).cwiseAbs().maxCoeff();
    return c;
}

TripleIdentityResidual triple_identity_residual(const GKTriple& triple, std::uint64_t seed, int pairs) {
    const Matrix t_inv_half = metric::power(triple.t12(), triple.g2(), -0.5);
    const Matrix t_half = metric::power(triple.t12(), triple.g2(), 0.5);
    Rng rng(seed);
    TripleIdentityResidual r;
    for (int k = 0; k < pairs; ++k) {
        const Vector u = rng.normal_vector(triple.dimension());
        const Vector v = rng.normal_vector(triple.dimension());
        const double lhs1 = triple.inner1(u, v);
        const double rhs1 = triple.inner2(t_inv_half * u, t_inv_half * v);
        r.h1_from_h2 = std::max(r.h1_from_h2, std::abs(lhs1 - rhs1) / (triple.norm1(u) * triple.norm1(v)));
        const double lhs2 = triple.inner2(u, v);
        const double rhs2 = triple.inner1(t_half * u, t_half * v);
        r.h2_from_h1 = std::max(r.h2_from_h1, std::abs(lhs2 - rhs2) / (triple.norm2(u) * triple.norm2(v)));
    }
    return r;
}

Vector steadman_duality(const Vector& u, const Matrix& g2, const BanachModel& model) {
    const double nb = model.norm(u);
    if (nb == 0.0) return Vector::Zero(u.size());
    const double n2sq = u.dot(g2 * u);
    return (nb * nb / n2sq) * (g2 * u);
}

double steadman_norm_excess(const Vector& u, const Matrix& g2, const BanachModel& model) {
    const double nb = model.norm(u);
    if (nb == 0.0) return 0.0;
    return model.dual_norm(steadman_duality(u, g2, model)) / nb;
}

BanachGramSchmidt gram_schmidt_banach(const Matrix& vectors, const Matrix& g2, const BanachModel& model) {
    const Eigen::Index n = vectors.rows();
    const Eigen::Index k = vectors.cols();
    if (n != g2.rows()) throw InvalidArgument("vector length must match the Gram matrix");
    Matrix q(n, k);
    for (Eigen::Index j = 0; j < k; ++j) {
        Vector v = vectors.col(j);
        const double original = metric::norm(v, g2);
        for (int pass = 0; pass < 2; ++pass)
            for (Eigen::Index i = 0; i < j; ++i) v -= metric::inner(q.col(i), v, g2) * q.col(i);
        const double nrm = metric::norm(v, g2);
        if (!(nrm > 1e-10 * original))
            throw DegeneracyError("input vector " + std::to_string(j + 1) + " depends on the previous ones",
                                  static_cast<std::size_t>(j));
        q.col(j) = v / nrm;
    }
    BanachGramSchmidt out{Matrix(n, k), Matrix(n, k)};
    for (Eigen::Index j = 0; j < k; ++j) {
        out.psi.col(j) = q.col(j) / model.norm(q.col(j));
        out.duality.col(j) = steadman_duality(out.psi.col(j), g2, model);
    }
    return out;
}

}  // namespace gkt
