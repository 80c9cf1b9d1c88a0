#pragma once

// Polar decomposition A = W R with R = (A*A)^{1/2}, step spectral families of R, the vector
// step function e_x(lambda) = W E(lambda) x and the Stieltjes sums built on it.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gkt/operator.hpp"

namespace gkt {

struct PolarDecomposition {
    Matrix w;
    Matrix r;
    int rank = 0;
};

/// R from the G1-orthonormal eigenpairs of A*A; W = A R^+ with singular values below
/// 1e-12 ||R|| treated as kernel. Throws ConditioningError when the eigensolver fails.
PolarDecomposition polar_decompose(const OperatorOnB& op);

struct SpectralFamily {
    Vector breakpoints;               // strictly increasing
    std::vector<Matrix> projections;  // G1-orthogonal eigenprojections, one per breakpoint

    /// E(lambda) = sum of projections with breakpoint <= lambda.
    Matrix at(double lambda) const;
    std::size_t size() const noexcept { return projections.size(); }
};

/// Eigenvalues of the G-selfadjoint R merged at 1e-8 ||R||.
SpectralFamily spectral_family(const Matrix& r, const Matrix& g);

enum class VariationNorm { H2, H1 };

struct BVVectorFunction {
    Vector jumps;                // jump locations
    std::vector<Vector> deltas;  // W P_j x
    double variation = 0.0;      // sum of jump norms
};

BVVectorFunction bv_vector_function(const PolarDecomposition& pd, const SpectralFamily& sf, const Vector& x,
                                    const GKTriple& triple, VariationNorm norm = VariationNorm::H2);

/// Variation of a_x(lambda) = E(lambda) x in the same norm.
double family_variation(const SpectralFamily& sf, const Vector& x, const GKTriple& triple,
                        VariationNorm norm = VariationNorm::H2);

/// Polar factors and spectral family of one operator.
struct SpectralPackage {
    PolarDecomposition polar;
    SpectralFamily family;
};

SpectralPackage spectral_package(const OperatorOnB& op);

/// sum_j lambda_j W P_j x.
Vector reconstruct(const SpectralPackage& pkg, const Vector& x);
Vector reconstruct(const OperatorOnB& op, const Vector& x);

/// A real function evaluated at breakpoints, either by formula or as a table aligned with
/// the ascending breakpoints.
class ScalarFunction {
public:
    ScalarFunction(std::string name, std::function<double(double)> fn);
    static ScalarFunction table(std::vector<double> values);

    /// identity, square, one, exp, step:<a> (1 for lambda >= a), poly:<c0,c1,...>,
    /// table:<v1,v2,...>.
    static ScalarFunction parse(const std::string& spec);

    const std::string& name() const noexcept { return name_; }
    double operator()(std::size_t index, double lambda) const;
    /// Number of table entries, if tabulated.
    std::optional<std::size_t> table_size() const;

private:
    std::string name_;
    std::function<double(double)> fn_;
    std::vector<double> table_;
    bool tabulated_ = false;
};

/// sum_j g(lambda_j) W P_j x. Throws DomainError when g is not finite at a breakpoint.
Vector functional_calculus(const SpectralPackage& pkg, const ScalarFunction& g, const Vector& x);

/// sum_j g(lambda_j) P_j: the calculus on R alone.
Matrix spectral_matrix(const SpectralFamily& sf, const ScalarFunction& g);

using BlockOperator = std::vector<std::vector<OperatorOnB>>;

/// (A x)_i = sum_j reconstruct(A_ij, x_j); blocks are decomposed in parallel.
Vector block_spectral(const BlockOperator& blocks, const Vector& x);
Vector block_spectral_serial(const BlockOperator& blocks, const Vector& x);

/// Dense matrix of the block operator.
Matrix assemble_blocks(const BlockOperator& blocks);

struct SpectralChecks {
    double polar_residual = 0.0;        // ||A - W R||_F / ||A||_F
    double r_selfadjoint = 0.0;         // G1 residual of R
    double r_min_eig = 0.0;
    double r_squared_residual = 0.0;    // ||R^2 - A*A|| / ||A*A||
    double projection_residual = 0.0;   // max |P_j P_k - delta_jk P_j|, |sum P_j - I|
    double reconstruct_residual = 0.0;  // max ||sum lambda W P x - A x|| / (||A|| ||x||)
    double isometry_residual = 0.0;     // max | ||W z||_2 - ||z||_1 | / ||z||_1 over z in range(R)
};

SpectralChecks spectral_checks(const OperatorOnB& op, const SpectralPackage& pkg, std::uint64_t seed, int samples);

}  // namespace gkt
