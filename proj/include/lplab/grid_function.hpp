#ifndef LPLAB_GRID_FUNCTION_HPP
#define LPLAB_GRID_FUNCTION_HPP

#include <functional>
#include <optional>
#include <vector>

#include "lplab/geometry.hpp"

namespace lplab {

/// Nonnegative function sampled on a uniform grid, interpolated
/// multilinearly between nodes and zero outside the box.
class GridFunction {
  public:
    GridFunction() = default;
    GridFunction(Grid grid, std::vector<double> values);

    /// Sample a callable at the grid nodes. Negative samples are rejected.
    static GridFunction sample(const Grid& grid, const std::function<double(const Point&)>& f);

    const Grid& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    double value(std::size_t flat_index) const { return values_[flat_index]; }
    double& value(std::size_t flat_index) { return values_[flat_index]; }
    int dim() const { return grid_.dim(); }

    /// Multilinear interpolation; 0 outside the box.
    double interpolate(const Point& p) const;

    /// Support membership on the closed support: interpolated value > 0, or
    /// p lies within half a spacing (per axis) of a node with positive value.
    bool in_support(const Point& p) const;

    /// Flat indices of nodes with positive value.
    const std::vector<std::size_t>& support_nodes() const { return support_; }

    /// Bounding box of the positive nodes; nullopt when the support is empty.
    std::optional<Box> support_box() const;

    double max_value() const;

    /// Trapezoidal-rule integral over the box; exact for the piecewise-linear
    /// interpolant of the samples.
    double integrate() const;

  private:
    Grid grid_;
    std::vector<double> values_;
    std::vector<std::size_t> support_;
};

/// Trapezoidal integral of f over its grid (free-function spelling).
double integrate_grid(const GridFunction& f);

} // namespace lplab

#endif
