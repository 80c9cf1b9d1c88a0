#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gkt/operator.hpp"

namespace gkt {

/// Singular values in the H2 metric: mu_n^2 are the eigenvalues of G2^{-1} A^T G2 A.
struct SingularSpectrum {
    Vector mu;     // non-increasing
    Matrix right;  // G2-orthonormal columns, right[:, n] belongs to mu[n]
};

SingularSpectrum singular_values(const OperatorOnB& op);

/// H2 adjoint G2^{-1} A^T G2.
Matrix star_h2(const Matrix& a, const Matrix& g2);

enum class SchattenMode { H2, B };

/// Throws InvalidArgument for p < 1.
double schatten_norm(const OperatorOnB& op, double p, SchattenMode mode);

/// Summands of the B-form: <A^(H2 adjoint) A psi, f^s_psi> over the B-normalised singular basis.
Vector schatten_b_terms(const OperatorOnB& op);

/// Non-negative increasing map on [0, inf): t, t^2, exp(t) - 1 or a piecewise-linear table.
class MonotoneMap {
public:
    static MonotoneMap linear();
    static MonotoneMap square();
    static MonotoneMap expm1();
    /// Nodes (t_i, v_i) with t strictly increasing from 0 and v non-negative and non-decreasing;
    /// linear extrapolation past the last node. Throws InvalidArgument otherwise.
    static MonotoneMap table(std::vector<double> t, std::vector<double> v);

    const std::string& name() const noexcept { return name_; }
    double operator()(double t) const { return fn_(t); }

private:
    MonotoneMap(std::string name, std::function<double(double)> fn) : name_(std::move(name)), fn_(std::move(fn)) {}
    std::string name_;
    std::function<double(double)> fn_;
};

/// Eigenvalues sorted by decreasing modulus (all n, so algebraic multiplicity is respected).
CVector eigenvalues_by_modulus(const Matrix& a);

/// Slacks are (rhs - lhs) / max(1, rhs).
struct WeylHornReport {
    std::size_t terms = 0;
    double weyl_lhs = 0.0;  // sum Phi(|lambda_n(A1)|)
    double weyl_rhs = 0.0;  // sum Phi(mu_n(A1))
    double horn_lhs = 0.0;  // sum Phi(|lambda_n(A1 A2)|)
    double horn_rhs = 0.0;  // sum Phi(mu_n(A1) mu_n(A2))
    double weyl_slack = 0.0;
    double horn_slack = 0.0;
};

/// Sums over the first `terms` indices (all when 0). A1 and A2 must share model and triple.
WeylHornReport weyl_horn_report(const OperatorOnB& a1, const OperatorOnB& a2, const MonotoneMap& phi,
                                std::size_t terms = 0);

struct LalescoLidskiiReport {
    double abs_eig_sum = 0.0;
    double mu_sum = 0.0;
    double lalesco_slack = 0.0;  // (mu_sum - abs_eig_sum) / max(1, mu_sum)
    double eig_sum_real = 0.0;
    double eig_sum_imag = 0.0;
    double trace = 0.0;
    double lidskii_residual = 0.0;  // |sum lambda - trace| / (1 + |trace|)
};

LalescoLidskiiReport lalesco_lidskii_report(const OperatorOnB& op);

/// sum mu_n ||G2 phi_n||_{B'} ||psi_n||_B for A = sum mu_n psi_n (G2 phi_n)^T: an upper bound
/// on the nuclear norm, not the infimum over representations.
double nuclear_upper_bound(const OperatorOnB& op);

/// ||A - A_k||_{G2} for the rank-k truncations of the singular expansion, k = 0..n.
Vector finite_rank_errors(const OperatorOnB& op);

}  // namespace gkt
