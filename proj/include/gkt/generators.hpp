#pragma once

// Seeded test instances and the named builtins accepted by the command-line tool.

#include <cstdint>
#include <memory>
#include <string>

#include "gkt/ks_space.hpp"
#include "gkt/operator.hpp"

namespace gkt::gen {

/// 0: l1, 1: l2, 2: sup, 3: lp with p = 3.
BanachModel model_kind(int kind, int n);
inline constexpr int kModelKinds = 4;

/// Dimension uniform in [n_min, n_max], model `kind` (random when negative), random triple and
/// N(0, 1/n) entries.
OperatorOnB random_operator(std::uint64_t seed, int kind = -1, int n_min = 2, int n_max = 16);

/// G2^{-1} S with S symmetric, on the l1 model with the default (uniform-weight) triple.
OperatorOnB random_g2_selfadjoint_l1(std::uint64_t seed, int n);

/// Random matrix shifted so every eigenvalue has real part <= -0.5.
Matrix random_stable_matrix(std::uint64_t seed, int n);

Matrix jordan_block(int n);

/// Default triple for builtins and triple-less inputs: identity metrics for l2, built otherwise.
std::shared_ptr<const GKTriple> default_triple(const BanachModel& model);

/// random:<seed>, jordan:<n>, diag:<a,b,...>, shift_l1. `n` sizes random and shift_l1.
OperatorOnB builtin_operator(const std::string& spec, int n, const std::string& model);

/// gaussian, indicator:<a,b>, chirp (2x cos x^2), dirac:<y[,y2[,y3]]>, hermite:<k>.
KSElement builtin_element(const std::string& spec, const Grid& grid);

}  // namespace gkt::gen
