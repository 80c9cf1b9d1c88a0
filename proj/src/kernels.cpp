#include "gkt/kernels.hpp"

#include "gkt/errors.hpp"

namespace gkt::kernels {

std::vector<double> cube_functionals(const GridFunction& f, std::span<const Cube> cubes) {
    std::vector<double> out(cubes.size(), 0.0);
    const auto count = static_cast<long>(cubes.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (long k = 0; k < count; ++k) out[k] = integrate_over_cube(f, cubes[k]);
    return out;
}

std::vector<double> cube_functionals_serial(const GridFunction& f, std::span<const Cube> cubes) {
    std::vector<double> out(cubes.size(), 0.0);
    for (std::size_t k = 0; k < cubes.size(); ++k) out[k] = integrate_over_cube(f, cubes[k]);
    return out;
}

std::vector<double> cube_functionals(const PointMass& d, std::span<const Cube> cubes) {
    std::vector<double> out(cubes.size(), 0.0);
    for (std::size_t k = 0; k < cubes.size(); ++k) out[k] = eval_cube_on_pointmass(d, cubes[k]);
    return out;
}

namespace {

double column_dot(const Matrix& table, std::span<const double> weights, Eigen::Index i, Eigen::Index j) {
    double s = 0.0;
    for (Eigen::Index k = 0; k < table.rows(); ++k) s += weights[k] * table(k, i) * table(k, j);
    return s;
}

void check_shape(const Matrix& table, std::span<const double> weights) {
    if (static_cast<std::size_t>(table.rows()) != weights.size())
        throw InvalidArgument("functional table rows must match weight count");
}

}  // namespace

Matrix weighted_gram(const Matrix& table, std::span<const double> weights) {
    check_shape(table, weights);
    const Eigen::Index n = table.cols();
    Matrix g(n, n);
#pragma omp parallel for schedule(dynamic)
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j <= i; ++j) g(i, j) = column_dot(table, weights, i, j);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) g(i, j) = g(j, i);
    return g;
}

Matrix weighted_gram_serial(const Matrix& table, std::span<const double> weights) {
    check_shape(table, weights);
    const Eigen::Index n = table.cols();
    Matrix g(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j <= i; ++j) g(i, j) = g(j, i) = column_dot(table, weights, i, j);
    return g;
}

double weighted_dot(std::span<const double> a, std::span<const double> b, std::span<const double> weights) {
    if (a.size() != b.size() || a.size() != weights.size())
        throw InvalidArgument("weighted_dot: length mismatch");
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += weights[k] * a[k] * b[k];
    return s;
}

}  // namespace gkt::kernels
