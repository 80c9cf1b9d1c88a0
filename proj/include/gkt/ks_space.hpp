#pragma once

// The Kuelbs-Steadman space KS^2 at finite truncation: cubes B_k centred on an enumeration of
// dyadic rationals with diagonals 2^-l, the functionals F_k(f) = int_{B_k} f, and the inner
// product (f, g) = sum_k t_k F_k(f) F_k(g). Also the Gross-Steadman space KS_1^2 built from
// a KS-orthonormalised Hermite basis.

#include <cstddef>
#include <memory>
#include <variant>
#include <vector>

#include "gkt/grid.hpp"
#include "gkt/linalg.hpp"

namespace gkt {

/// (level l, rational index i), both 1-based. Cube diagonal is 2^-l, centre is rational i.
struct CubeIndex {
    int level;
    int rational;
    bool operator==(const CubeIndex&) const = default;
};

/// First K points of the canonical dyadic enumeration of Q^n.
/// 1-d: stage q = 0, 1, 2, ... lists p / 2^q for |p| <= q 2^q by increasing |p|, positive
/// first, skipping values already listed. n-d: point k is (r_a, point_{n-1}(b)) where (a, b)
/// is the k-th pair of cube_enumeration.
std::vector<Point> enumerate_rationals(int n, std::size_t count);

/// First K pairs of the diagonal sweep over N x N that begins
/// (1,1),(2,1),(1,2),(1,3),(2,2),(3,1),(3,2),(2,3).
/// Diagonal d = l + i: d = 3 runs l downward; even d runs l upward; odd d >= 5 runs l
/// downward from d-2 to 1 and closes with (d-1, 1).
std::vector<CubeIndex> cube_enumeration(std::size_t count);

class CubeEnumeration {
public:
    CubeEnumeration(int n, std::size_t count);

    int dimension() const noexcept { return n_; }
    std::size_t size() const noexcept { return cubes_.size(); }
    const std::vector<CubeIndex>& indices() const noexcept { return indices_; }
    const std::vector<Cube>& cubes() const noexcept { return cubes_; }

private:
    int n_;
    std::vector<CubeIndex> indices_;
    std::vector<Cube> cubes_;
};

class KSConfig {
public:
    /// t_k = 2^-k: the first K terms of a probability sequence.
    static KSConfig dyadic(int n, std::size_t count = 512);
    /// Explicit weights; must be positive with sum <= 1.
    KSConfig(CubeEnumeration enumeration, std::vector<double> weights);

    int dimension() const noexcept { return enumeration_.dimension(); }
    std::size_t size() const noexcept { return weights_.size(); }
    const CubeEnumeration& enumeration() const noexcept { return enumeration_; }
    const std::vector<double>& weights() const noexcept { return weights_; }
    bool dyadic_weights() const noexcept { return dyadic_; }

private:
    CubeEnumeration enumeration_;
    std::vector<double> weights_;
    bool dyadic_ = false;
};

using KSElement = std::variant<GridFunction, PointMass>;

/// (F_1(e), ..., F_K(e)).
std::vector<double> ks_functionals(const KSElement& e, const KSConfig& cfg);

double ks_inner(const KSElement& f, const KSElement& g, const KSConfig& cfg);
double ks_norm(const KSElement& f, const KSConfig& cfg);

struct EmbeddingReport {
    double ks = 0.0;
    double l1 = 0.0;
    double l2 = 0.0;    // infinite for point masses
    double linf = 0.0;  // infinite for point masses
    double alexiewicz = 0.0;
    bool ks_le_l1 = false;
    bool ks_le_l2 = false;
    bool ks_le_linf = false;
    bool ks_le_2alexiewicz = false;

    bool all_hold() const noexcept { return ks_le_l1 && ks_le_l2 && ks_le_linf && ks_le_2alexiewicz; }
};

/// Classical norms next to the KS norm; flags use an absolute-plus-relative slack of 1e-9.
EmbeddingReport embedding_report(const KSElement& f, const KSConfig& cfg);

/// 1-d Hermite function h_k (k >= 0), orthonormal in L^2(R).
double hermite_function(int k, double x);

struct HermiteKSBasis {
    std::size_t count = 0;
    std::vector<GridFunction> functions;  // phi_1..phi_N, KS-orthonormal
    std::vector<GridFunction> sources;    // h_1..h_N sampled on the grid
    Matrix coefficients;                  // phi_j = sum_i coefficients(i, j) h_i (upper triangular)
    std::shared_ptr<const KSConfig> config;
};

inline constexpr std::size_t kHermiteCap = 30;

/// Gram-Schmidt of the first N Hermite functions (tensor products ordered by total degree
/// when n > 1) in the KS inner product. Throws DegeneracyError when the leading Gram matrix
/// condition exceeds 1e12.
HermiteKSBasis build_hermite_ks_basis(std::size_t count, const Grid& grid, std::shared_ptr<const KSConfig> cfg,
                                      std::size_t cap = kHermiteCap);

/// lambda_n = 6 / (pi^2 n^2), n >= 1.
double gross_steadman_weight(std::size_t n);
/// sum_{n <= N} lambda_n.
double gross_steadman_weight_mass(std::size_t count);

struct KS1Inner {
    double value = 0.0;
    /// True when u or v had a component outside span(phi) that was projected away.
    bool projected = false;
};

/// sum_n (pi^2 n^2 / 6) (u, phi_n)_KS (phi_n, v)_KS.
KS1Inner ks1_inner(const KSElement& u, const KSElement& v, const HermiteKSBasis& basis);

}  // namespace gkt
