#pragma once

// Uniform tensor grids on the box [-L, L]^n, sampled functions, point masses and cubes.
// Functions are treated as zero outside the box.

#include <array>
#include <cstddef>
#include <limits>
#include <vector>

namespace gkt {

using Point = std::vector<double>;

/// Uniform grid with m points per axis on [-L, L]^n, 1 <= n <= 3.
class Grid {
public:
    Grid(int dimension, double half_width, std::size_t points_per_axis);

    int dimension() const noexcept { return n_; }
    double half_width() const noexcept { return half_width_; }
    std::size_t points_per_axis() const noexcept { return m_; }
    double spacing() const noexcept { return h_; }
    std::size_t size() const noexcept;

    /// Coordinate of index i on any axis: -L + i h.
    double coordinate(std::size_t i) const noexcept { return -half_width_ + static_cast<double>(i) * h_; }

    /// Flat index of a multi-index; axis 0 varies slowest.
    std::size_t flat_index(const std::array<std::size_t, 3>& idx) const noexcept;
    std::array<std::size_t, 3> multi_index(std::size_t flat) const noexcept;
    Point point(std::size_t flat) const;

    /// 1-d trapezoidal weights along one axis (h inside, h/2 at the ends).
    std::vector<double> axis_weights() const;
    /// Tensor-product trapezoidal weights for every grid point.
    std::vector<double> weights() const;

    bool contains(const Point& y) const noexcept;
    bool same_box(const Grid& other) const noexcept;
    bool operator==(const Grid& other) const noexcept;

private:
    int n_;
    double half_width_;
    std::size_t m_;
    double h_;
};

class GridFunction {
public:
    GridFunction(Grid grid, std::vector<double> values);

    /// Samples fn at every grid point.
    template <typename F>
    static GridFunction sample(const Grid& grid, F&& fn) {
        std::vector<double> v(grid.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = fn(grid.point(i));
        return GridFunction(grid, std::move(v));
    }

    const Grid& grid() const noexcept { return grid_; }
    const std::vector<double>& values() const noexcept { return values_; }
    double operator[](std::size_t i) const noexcept { return values_[i]; }

    GridFunction scaled(double a) const;
    /// a*this + b*other on the same grid.
    GridFunction combined(double a, const GridFunction& other, double b) const;

private:
    Grid grid_;
    std::vector<double> values_;
};

struct PointMass {
    Point location;
    double weight = 1.0;
};

/// Closed axis-aligned cube with the given center and diagonal; side = diagonal / sqrt(n).
class Cube {
public:
    Cube(Point center, double diagonal);

    const Point& center() const noexcept { return center_; }
    double diagonal() const noexcept { return diagonal_; }
    int dimension() const noexcept { return static_cast<int>(center_.size()); }
    double side() const noexcept;
    double half_side() const noexcept { return 0.5 * side(); }
    double volume() const noexcept;
    /// Closed-cube membership; boundary counts as inside.
    bool contains(const Point& y) const noexcept;

private:
    Point center_;
    double diagonal_;
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Per-axis weights for integrating the cell-averaged interpolant over [lo, hi]:
/// each cell contributes (covered length) * (f_i + f_{i+1}) / 2.
std::vector<double> interval_weights(const Grid& grid, double lo, double hi);

/// Integral of f over the cube (clipped to the box) with partial-cell fractional weighting.
double integrate_over_cube(const GridFunction& f, const Cube& cube);

/// (sum |f_i|^p w_i)^{1/p} with trapezoidal weights; max |f_i| for p = infinity.
double lp_norm(const GridFunction& f, double p);

/// 1-d: max_s |int_{-L}^s f| over grid points. n-d: max over origin-centred cubes whose
/// diagonal steps through multiples of h up to the box diagonal.
double alexiewicz_norm(const GridFunction& f);

/// Cumulative trapezoidal integral with F(-L) = 0. 1-d only.
GridFunction weak_primitive(const GridFunction& f);

/// w if the closed cube contains the mass location, else 0.
double eval_cube_on_pointmass(const PointMass& d, const Cube& cube);

}  // namespace gkt
