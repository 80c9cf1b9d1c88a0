#pragma once

// Data-parallel inner loops. Every parallel kernel has a serial twin with identical
// arithmetic per output entry, so results agree bit for bit; tests compare the two.

#include <span>
#include <vector>

#include "gkt/grid.hpp"
#include "gkt/linalg.hpp"

namespace gkt::kernels {

/// F_k(f) = integral of f over cube k, for every cube.
std::vector<double> cube_functionals(const GridFunction& f, std::span<const Cube> cubes);
std::vector<double> cube_functionals_serial(const GridFunction& f, std::span<const Cube> cubes);

/// F_k(d) for a point mass.
std::vector<double> cube_functionals(const PointMass& d, std::span<const Cube> cubes);

/// Weighted Gram matrix G_ij = sum_k t_k F_ki F_kj for a K x N functional table.
/// The k-sum runs in ascending order for every entry.
Matrix weighted_gram(const Matrix& table, std::span<const double> weights);
Matrix weighted_gram_serial(const Matrix& table, std::span<const double> weights);

/// sum_k t_k a_k b_k in ascending k.
double weighted_dot(std::span<const double> a, std::span<const double> b, std::span<const double> weights);

}  // namespace gkt::kernels
