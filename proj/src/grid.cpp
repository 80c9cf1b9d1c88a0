#include "gkt/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gkt/errors.hpp"

namespace gkt {

Grid::Grid(int dimension, double half_width, std::size_t points_per_axis)
    : n_(dimension), half_width_(half_width), m_(points_per_axis), h_(0.0) {
    if (n_ < 1 || n_ > 3) throw InvalidArgument("grid dimension must be 1, 2 or 3, got " + std::to_string(n_));
    if (!(half_width_ > 0.0) || !std::isfinite(half_width_))
        throw InvalidArgument("grid half-width must be positive and finite");
    if (m_ < 2) throw InvalidArgument("grid needs at least 2 points per axis");
    h_ = 2.0 * half_width_ / static_cast<double>(m_ - 1);
}

std::size_t Grid::size() const noexcept {
    std::size_t total = 1;
    for (int a = 0; a < n_; ++a) total *= m_;
    return total;
}

std::size_t Grid::flat_index(const std::array<std::size_t, 3>& idx) const noexcept {
    std::size_t flat = 0;
    for (int a = 0; a < n_; ++a) flat = flat * m_ + idx[a];
    return flat;
}

std::array<std::size_t, 3> Grid::multi_index(std::size_t flat) const noexcept {
    std::array<std::size_t, 3> idx{0, 0, 0};
    for (int a = n_ - 1; a >= 0; --a) {
        idx[a] = flat % m_;
        flat /= m_;
    }
    return idx;
}

Point Grid::point(std::size_t flat) const {
    const auto idx = multi_index(flat);
    Point p(static_cast<std::size_t>(n_));
    for (int a = 0; a < n_; ++a) p[a] = coordinate(idx[a]);
    return p;
}

std::vector<double> Grid::axis_weights() const {
    std::vector<double> w(m_, h_);
    w.front() = 0.5 * h_;
    w.back() = 0.5 * h_;
    return w;
}

std::vector<double> Grid::weights() const {
    const auto axis = axis_weights();
    std::vector<double> w(size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto idx = multi_index(i);
        double prod = 1.0;
        for (int a = 0; a < n_; ++a) prod *= axis[idx[a]];
        w[i] = prod;
    }
    return w;
}

bool Grid::contains(const Point& y) const noexcept {
    if (static_cast<int>(y.size()) != n_) return false;
    return std::all_of(y.begin(), y.end(), [&](double v) { return std::abs(v) <= half_width_; });
}

bool Grid::same_box(const Grid& other) const noexcept {
    return n_ == other.n_ && half_width_ == other.half_width_;
}

bool Grid::operator==(const Grid& other) const noexcept {
    return same_box(other) && m_ == other.m_;
}

GridFunction::GridFunction(Grid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != grid_.size())
        throw InvalidArgument("grid function has " + std::to_string(values_.size()) + " values, grid has " +
                              std::to_string(grid_.size()) + " points");
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (!std::isfinite(values_[i])) throw InvalidArgument("non-finite value at grid index " + std::to_string(i));
}

GridFunction GridFunction::scaled(double a) const {
    std::vector<double> v(values_);
    for (auto& x : v) x *= a;
    return GridFunction(grid_, std::move(v));
}

GridFunction GridFunction::combined(double a, const GridFunction& other, double b) const {
    if (!(grid_ == other.grid_)) throw InvalidArgument("cannot combine functions on different grids");
    std::vector<double> v(values_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a * values_[i] + b * other.values_[i];
    return GridFunction(grid_, std::move(v));
}

Cube::Cube(Point center, double diagonal) : center_(std::move(center)), diagonal_(diagonal) {
    if (!(diagonal_ > 0.0) || !std::isfinite(diagonal_)) throw InvalidArgument("cube diagonal must be positive");
    if (center_.empty() || center_.size() > 3) throw InvalidArgument("cube dimension must be 1, 2 or 3");
}

double Cube::side() const noexcept {
    return center_.size() == 1 ? diagonal_ : diagonal_ / std::sqrt(static_cast<double>(center_.size()));
}

double Cube::volume() const noexcept { return std::pow(side(), static_cast<double>(center_.size())); }

bool Cube::contains(const Point& y) const noexcept {
    if (y.size() != center_.size()) return false;
    const double half = half_side();
    const double slack = 1e-12 * half;
    for (std::size_t a = 0; a < y.size(); ++a)
        if (std::abs(y[a] - center_[a]) > half + slack) return false;
    return true;
}

std::vector<double> interval_weights(const Grid& grid, double lo, double hi) {
    const std::size_t m = grid.points_per_axis();
    std::vector<double> w(m, 0.0);
    if (!(hi > lo)) return w;
    for (std::size_t j = 0; j + 1 < m; ++j) {
        const double a = std::max(grid.coordinate(j), lo);
        const double b = std::min(grid.coordinate(j + 1), hi);
        if (b > a) {
            const double half = 0.5 * (b - a);
            w[j] += half;
            w[j + 1] += half;
        }
    }
    return w;
}

namespace {

struct AxisSpan {
    std::vector<double> w;
    std::size_t first = 0;
    std::size_t last = 0;  // exclusive
};

AxisSpan axis_span(const Grid& grid, double lo, double hi) {
    AxisSpan s{interval_weights(grid, lo, hi)};
    s.first = s.w.size();
    for (std::size_t i = 0; i < s.w.size(); ++i) {
        if (s.w[i] != 0.0) {
            s.first = std::min(s.first, i);
            s.last = i + 1;
        }
    }
    if (s.first >= s.last) s.first = s.last = 0;
    return s;
}

}  // namespace

double integrate_over_cube(const GridFunction& f, const Cube& cube) {
    const Grid& grid = f.grid();
    const int n = grid.dimension();
    if (cube.dimension() != n) throw InvalidArgument("cube and grid dimensions differ");
    const double half = cube.half_side();
    std::array<AxisSpan, 3> spans;
    for (int a = 0; a < n; ++a) {
        spans[a] = axis_span(grid, cube.center()[a] - half, cube.center()[a] + half);
        if (spans[a].first == spans[a].last) return 0.0;
    }
    const auto& v = f.values();
    const std::size_t m = grid.points_per_axis();
    double total = 0.0;
    if (n == 1) {
        for (std::size_t i = spans[0].first; i < spans[0].last; ++i) total += v[i] * spans[0].w[i];
    } else if (n == 2) {
        for (std::size_t i = spans[0].first; i < spans[0].last; ++i) {
            double row = 0.0;
            for (std::size_t j = spans[1].first; j < spans[1].last; ++j) row += v[i * m + j] * spans[1].w[j];
            total += row * spans[0].w[i];
        }
    } else {
        for (std::size_t i = spans[0].first; i < spans[0].last; ++i) {
            double plane = 0.0;
            for (std::size_t j = spans[1].first; j < spans[1].last; ++j) {
                double row = 0.0;
                for (std::size_t k = spans[2].first; k < spans[2].last; ++k)
                    row += v[(i * m + j) * m + k] * spans[2].w[k];
                plane += row * spans[1].w[j];
            }
            total += plane * spans[0].w[i];
        }
    }
    return total;
}

double lp_norm(const GridFunction& f, double p) {
    if (std::isnan(p) || p < 1.0) throw InvalidArgument("lp_norm requires p >= 1");
    const auto& v = f.values();
    if (std::isinf(p)) {
        double best = 0.0;
        for (double x : v) best = std::max(best, std::abs(x));
        return best;
    }
    const auto w = f.grid().weights();
    double sum = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) sum += std::pow(std::abs(v[i]), p) * w[i];
    return std::pow(sum, 1.0 / p);
}

GridFunction weak_primitive(const GridFunction& f) {
    const Grid& grid = f.grid();
    if (grid.dimension() != 1)
        throw Unsupported("weak primitive is defined on 1-d grids only; use alexiewicz_norm in higher dimensions");
    const auto& v = f.values();
    std::vector<double> prim(v.size(), 0.0);
    const double h = grid.spacing();
    for (std::size_t i = 1; i < v.size(); ++i) prim[i] = prim[i - 1] + 0.5 * h * (v[i - 1] + v[i]);
    return GridFunction(grid, std::move(prim));
}

double alexiewicz_norm(const GridFunction& f) {
    const Grid& grid = f.grid();
    if (grid.dimension() == 1) {
        const auto prim = weak_primitive(f);
        double best = 0.0;
        for (double x : prim.values()) best = std::max(best, std::abs(x));
        return best;
    }
    const int n = grid.dimension();
    const double h = grid.spacing();
    const double box_diagonal = 2.0 * grid.half_width() * std::sqrt(static_cast<double>(n));
    const auto steps = static_cast<std::size_t>(std::ceil(box_diagonal / h - 1e-9));
    const Point origin(static_cast<std::size_t>(n), 0.0);
    double best = 0.0;
    for (std::size_t j = 1; j <= steps; ++j) {
        const double r = std::min(static_cast<double>(j) * h, box_diagonal);
        best = std::max(best, std::abs(integrate_over_cube(f, Cube(origin, r))));
    }
    return best;
}

double eval_cube_on_pointmass(const PointMass& d, const Cube& cube) {
    return cube.contains(d.location) ? d.weight : 0.0;
}

}  // namespace gkt
