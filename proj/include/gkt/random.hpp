#pragma once

#include <cstdint>
#include <random>

#include "gkt/linalg.hpp"

namespace gkt {

/// Mixes a base seed with a stream id and an index into an independent per-task seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index = 0);

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
    std::uint64_t next() { return engine_(); }

    Vector normal_vector(Eigen::Index n);
    Matrix normal_matrix(Eigen::Index rows, Eigen::Index cols);
    /// Haar-ish orthogonal matrix from the QR of a Gaussian matrix.
    Matrix orthogonal(Eigen::Index n);
    /// Q diag(d) Q^T with d uniform in [lo, hi].
    Matrix spd(Eigen::Index n, double lo, double hi);

private:
    std::mt19937_64 engine_;
};

}  // namespace gkt
