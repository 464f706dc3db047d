#ifndef LPLAB_GEOMETRY_HPP
#define LPLAB_GEOMETRY_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace lplab {

using Point = std::vector<double>;

/// Axis-aligned box in R^n. lo[i] < hi[i] for every axis.
struct Box {
    std::vector<double> lo;
    std::vector<double> hi;

    Box() = default;
    Box(std::vector<double> lo_, std::vector<double> hi_);

    int dim() const { return static_cast<int>(lo.size()); }
    double length(int axis) const { return hi[axis] - lo[axis]; }
    double volume() const;
    bool contains(const Point& p, double slack = 0.0) const;
};

/// Uniform rectangular grid over a Box. Nodes include the box corners;
/// spacing[i] = (hi[i]-lo[i])/(shape[i]-1).
struct Grid {
    Box box;
    std::vector<int> shape;  // nodes per axis, each >= 2

    Grid() = default;
    Grid(Box b, std::vector<int> nodes_per_axis);
    Grid(Box b, int nodes_per_axis);  // same count on every axis

    int dim() const { return box.dim(); }
    std::size_t size() const;
    double spacing(int axis) const { return box.length(axis) / (shape[axis] - 1); }
    double max_spacing() const;

    // row-major flat index <-> multi-index <-> coordinates
    std::size_t flat(const std::vector<int>& idx) const;
    std::vector<int> multi(std::size_t flat_index) const;
    Point node(std::size_t flat_index) const;
    Point node(const std::vector<int>& idx) const;

    /// Multi-index of the node nearest to p (clamped to the grid).
    std::vector<int> nearest(const Point& p) const;

    /// True if the node counts refine this grid by interval doubling
    /// (shape' = 2*shape - 1 on every axis, same box).
    bool refines_to(const Grid& finer) const;
};

} // namespace lplab

#endif
