#pragma once

// The Banach adjoint A* = G1^{-1} A^T G2, characterised by (x, A* v)_1 = (A x, v)_2, and the
// checks built on it: A*A structure, (I + A*A)^{-1}, Lax-type norm bounds, the l^1
// counterexample, Yosida approximants and natural selfadjointness.

#include <cstdint>
#include <string>
#include <vector>

#include "gkt/operator.hpp"

namespace gkt {

OperatorOnB banach_adjoint(const OperatorOnB& op);

/// Ga^{-1} X^T Gb. banach_adjoint is star_with(A, G1, G2).
Matrix star_with(const Matrix& x, const Matrix& ga, const Matrix& gb);

/// |(x, A* v)_1 - (A x, v)_2| / (||A||_F ||G2||_F ||x|| ||v||), Euclidean norms on x, v.
double defining_relation_residual(const OperatorOnB& op, const Matrix& adjoint, const Vector& x, const Vector& v);

/// Max defining-relation residual over `pairs` seeded random (x, v).
double max_defining_relation_residual(const OperatorOnB& op, std::uint64_t seed, int pairs);

struct AtaReport {
    // asserted
    double g1_selfadjoint_residual = 0.0;  // ||G1 C - C^T G1|| / ||G1 C||
    double min_positivity = 0.0;           // min (x, Cx)_1 / ||x||_1^2 over samples
    double min_eig = 0.0;                  // smallest eigenvalue of C (G1-symmetrised)
    // observed
    double accretivity_min = 0.0;  // min <Cx, f_x^s> / ||x||_B^2 over samples
    double alt_star_gap = 0.0;     // ||G1^{-1} C^T G2 - C|| / ||C||

    bool asserted_hold() const noexcept;
};

AtaReport ata_analysis(const OperatorOnB& op, std::uint64_t seed = 1, int samples = 64);

/// (I + A*A)^{-1}; throws ConditioningError when the residual exceeds 1e-10.
Matrix inverse_i_plus_ata(const OperatorOnB& op);

struct LaxReport {
    double norm_b = 0.0;
    bool norm_b_exact = true;  // false: sampled lower bound
    double norm_g2 = 0.0;
    bool g2_selfadjoint = false;
    bool embedding_constant_le_one = false;
    bool asserted = false;  // inequality asserted (G2-selfadjoint and embedding constant <= 1)
    bool holds = true;      // norm_g2 <= norm_b + 1e-10 (checked whenever asserted)

    double ratio() const noexcept { return norm_b > 0.0 ? norm_g2 / norm_b : 0.0; }
};

/// Operator norm on the Banach model: exact for l1, l2, sup; otherwise a lower bound from
/// 10^4 sign-pattern and random vectors refined by a few power-type iterations.
double banach_operator_norm(const Matrix& a, const BanachModel& model, bool* exact = nullptr, std::uint64_t seed = 1);

/// sup ||u||_2 / ||u||_B: exact over extreme points for l1, l2 and sup (n <= 20), sampled otherwise.
double embedding_constant(const GKTriple& triple, const BanachModel& model, std::uint64_t seed = 1, int samples = 2000);

LaxReport lax_bound(const OperatorOnB& op);

struct CounterexampleReport {
    int n = 1;
    double x_norm_l2 = 0.0;
    double x_norm_l1 = 0.0;
    double tx_minus_e1_l2 = 0.0;
    double t_norm_l1 = 0.0;
    double expected_x_norm_l2 = 0.0;      // n^{-1/2}
    double expected_tx_minus_e1_l2 = 0.0;  // sqrt(n-1)/n
};

/// T e1 = e1, T ek = e1 + ek; x_n = (e1 + ... + en)/n.
Matrix ell1_shift_operator(int n);
CounterexampleReport ell1_counterexample(int n);

/// lambda A (lambda I - A)^{-1}; throws ResolventError when cond(lambda I - A) >= 1e12.
Matrix yosida_approximant(const Matrix& a, double lambda);
inline Matrix yosida_approximant(const OperatorOnB& op, double lambda) { return yosida_approximant(op.matrix(), lambda); }

struct NaturalSelfadjointReport {
    double adjoint_gap = 0.0;  // ||A - A*|| / max(||A||, tiny)
    bool naturally_selfadjoint = false;
    std::vector<double> times;
    double max_group_norm = 0.0;  // max over +-t of ||exp(i t A)||_{G2}
    bool group_isometric = false;
    bool single_metric = false;
    bool agreement = true;  // (i) == (ii); meaningful (asserted) when single_metric
};

NaturalSelfadjointReport natural_selfadjoint_check(const OperatorOnB& op, double tol = 1e-10,
                                                   std::vector<double> times = {0.1, 1.0, 10.0});

/// max over matched eigenvalues |eig(A) - eig(G2^{1/2} A G2^{-1/2})|: spectrum of A on B and
/// of its H2 extension coincide.
double spectrum_preservation_gap(const OperatorOnB& op);

}  // namespace gkt
