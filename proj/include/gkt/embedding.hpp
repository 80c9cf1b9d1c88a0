#pragma once

// Finite-dimensional Gross-Kuelbs triples H1 c B c H2 on R^n. H2 carries the Gram matrix
// G2 = sum_m t_m f_m f_m^T built from duality functionals of a dense family; H1 carries
// G1 = G2 Phi diag(1/lambda) Phi^T G2 for a G2-orthonormal basis Phi, and
// T12 = Phi diag(lambda) Phi^T G2 links the two.

#include <cstdint>
#include <optional>

#include "gkt/banach_model.hpp"
#include "gkt/linalg.hpp"

namespace gkt {

/// G2 = sum_m t_m f_m f_m^T over the duality functionals f_m of the columns of `family`.
/// Throws DegeneracyError when the functionals do not span the dual.
Matrix build_h2(const BanachModel& model, const Matrix& family, const Vector& weights);

struct H1Parts {
    Matrix g1;
    Matrix t12;
};

/// Throws InvalidArgument unless every lambda_n > 0.
H1Parts build_h1(const Matrix& g2, const Matrix& phi, const Vector& lambda);

/// lambda_n = 6 / (pi^2 n^2), n = 1..count.
Vector default_lambda(Eigen::Index count);

/// Phi = L^{-T} Q for G2 = L L^T; Q = I gives G2-Gram-Schmidt of the coordinate basis.
Matrix g2_orthonormal_basis(const Matrix& g2, const std::optional<Matrix>& rotation = std::nullopt);

class GKTriple {
public:
    /// Validates every invariant; throws InvalidArgument on failure.
    GKTriple(Matrix g1, Matrix g2, Matrix phi, Vector lambda, Vector t);

    struct Options {
        std::uint64_t seed = 1;
        /// Uniform 1/M when empty.
        std::optional<Vector> weights;
        /// Default 6 / (pi^2 n^2) when empty.
        std::optional<Vector> lambda;
        /// Rotate Phi by a seeded random orthogonal matrix.
        bool random_basis = false;
    };

    /// Dense family -> G2 -> Phi -> (G1, T12).
    static GKTriple build(const BanachModel& model, const Options& options);
    static GKTriple build(const BanachModel& model) { return build(model, Options{}); }
    /// Seeded random weights, lambda family and basis rotation.
    static GKTriple random(const BanachModel& model, std::uint64_t seed);
    /// G1 = G2 = I, Phi = I, lambda = 1.
    static GKTriple hilbert(int n);

    int dimension() const noexcept { return static_cast<int>(g2_.rows()); }
    const Matrix& g1() const noexcept { return g1_; }
    const Matrix& g2() const noexcept { return g2_; }
    const Matrix& phi() const noexcept { return phi_; }
    const Vector& lambda() const noexcept { return lambda_; }
    const Vector& t() const noexcept { return t_; }
    const Matrix& t12() const noexcept { return t12_; }

    double inner1(const Vector& u, const Vector& v) const { return u.dot(g1_ * v); }
    double inner2(const Vector& u, const Vector& v) const { return u.dot(g2_ * v); }
    double norm1(const Vector& u) const;
    double norm2(const Vector& u) const;

    /// G1 == G2 (Hilbert-mode configuration).
    bool single_metric(double tol = 1e-12) const;

private:
    Matrix g1_, g2_, phi_, t12_;
    Vector lambda_, t_;
};

struct TripleCheck {
    double g1_symmetry = 0.0;
    double g2_symmetry = 0.0;
    double g1_min_eig = 0.0;
    double g2_min_eig = 0.0;
    double phi_orthonormality = 0.0;  // max |Phi^T G2 Phi - I|
    double t12_spectrum_gap = 0.0;    // max |sorted eig(T12) - sorted lambda|
};

TripleCheck check_triple(const GKTriple& triple);

/// max over sampled pairs of |(u,v)_1 - (T^{-1/2}u, T^{-1/2}v)_2| / (||u||_1 ||v||_1) and the
/// mirrored identity (u,v)_2 = (T^{1/2}u, T^{1/2}v)_1; square roots via G2-eigendecomposition of T12.
struct TripleIdentityResidual {
    double h1_from_h2 = 0.0;
    double h2_from_h1 = 0.0;
};
TripleIdentityResidual triple_identity_residual(const GKTriple& triple, std::uint64_t seed, int pairs);

Vector duality_functional(const Vector& u, const BanachModel& model);

/// f_u^s = (||u||_B^2 / ||u||_2^2) G2 u, so that <u, f_u^s> = ||u||_B^2.
Vector steadman_duality(const Vector& u, const Matrix& g2, const BanachModel& model);

/// ||f_u^s||_{B'} / ||u||_B; may exceed 1 off the span of u.
double steadman_norm_excess(const Vector& u, const Matrix& g2, const BanachModel& model);

struct BanachGramSchmidt {
    Matrix psi;      // columns, G2-orthogonal with unit B-norm
    Matrix duality;  // columns f^s_{psi_i}
};

/// G2-Gram-Schmidt of the columns, then B-normalisation and Steadman duality maps.
/// Throws DegeneracyError at the first dependent column.
BanachGramSchmidt gram_schmidt_banach(const Matrix& vectors, const Matrix& g2, const BanachModel& model);

}  // namespace gkt
