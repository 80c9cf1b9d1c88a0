#pragma once

// exp(-tR) semigroups, decay constants ||exp(-tR)|| <= M exp(-mu t), the contraction window
// (T, r), the Poincare constant c = T / (1 - r) and its verification on sampled vectors.

#include <cstdint>
#include <string>

#include "gkt/operator.hpp"

namespace gkt {

/// exp(-t R). Throws InvalidArgument for t < 0.
Matrix semigroup_step(const Matrix& r, double t);

struct DecayEstimate {
    double m = 1.0;   // overshoot, >= 1
    double mu = 0.0;  // decay rate
    std::string source = "spectral+conditioning";
    double worst_bound_ratio = 0.0;  // max over the t-grid of ||exp(-tR)||_G / (M exp(-mu t))
    int grid_points = 0;
};

/// mu = min Re eig(R); M = 1 when R is G-selfadjoint, otherwise the G-condition number of the
/// column-normalised eigenvector matrix. Throws SpectralGapError when mu <= 1e-12 max(1, ||R||)
/// and ConditioningError when R is not diagonalisable.
DecayEstimate decay_constants(const Matrix& r, const Matrix& g);

struct ContractionWindow {
    double t = 0.0;
    double r = 0.0;
};

/// T = (ln M + slack) / mu, r = M exp(-mu T). Throws InvalidArgument for slack <= 0.
ContractionWindow contraction_window(const DecayEstimate& est, double slack = 1.0);

double poincare_constant(const ContractionWindow& w);

struct DecayIntegral {
    double horizon = 0.0;   // 20 / mu
    double integral = 0.0;  // trapezoid of ||exp(-tR)||_G on [0, horizon]
    bool finite = false;
};

DecayIntegral decay_integral(const Matrix& r, const Matrix& g, const DecayEstimate& est, int points = 401);

struct PoincareReport {
    DecayEstimate decay;
    ContractionWindow window;
    double slack = 1.0;
    double c = 0.0;
    int samples = 0;
    // asserted in the H1 metric: ||u||_1 <= c ||R u||_1, with ||R u||_1 = ||A u||_2
    double worst_ratio = 0.0;  // min c ||Ru||_1 / ||u||_1
    int violations = 0;
    double spectral_gap_bound = 0.0;  // min mu^{-1} ||Ru||_1 / ||u||_1
    double max_isometry_gap = 0.0;    // max | ||Ru||_1 - ||Au||_2 | / ||Ru||_1
    // observed: ||u||_B <= c ||A u||_B
    double observed_b_ratio = 0.0;  // min c ||Au||_B / ||u||_B
    int observed_b_violations = 0;
    bool single_metric = false;
    DecayIntegral integral;

    bool holds() const noexcept { return violations == 0; }
};

/// Samples are drawn in parallel from derive_seed(seed, 0, i) and reduced in index order.
PoincareReport poincare_verify(const OperatorOnB& op, int samples, double slack = 1.0, std::uint64_t seed = 1);

struct RelativeBoundReport {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;        // Poincare constant of A
    double c_tilde = 0.0;  // a c + b
    int samples = 0;
    double premise_worst = 0.0;  // max ||Bu||_2 - (a ||u||_1 + b ||Au||_2), normalised by ||u||_1
    bool premise_holds = false;
    double consolidated_worst_ratio = 0.0;  // max ||Bu||_2 / (c_tilde ||Au||_2)
    bool consolidated_holds = false;
};

/// ||Bu||_2 <= a ||u||_1 + b ||Au||_2 on samples, then ||Bu||_2 <= (a c + b) ||Au||_2.
RelativeBoundReport relative_bound_check(const OperatorOnB& b_op, const OperatorOnB& a_op, double a, double b,
                                         int samples, double slack = 1.0, std::uint64_t seed = 1);

}  // namespace gkt
