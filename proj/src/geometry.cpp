#include "lplab/geometry.hpp"

#include <cmath>
#include <cstdio>

namespace lplab {

Box::Box(std::vector<double> lo_, std::vector<double> hi_)
    : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo.empty() || lo.size() != hi.size())
        throw std::invalid_argument("Box: lo/hi must be nonempty and of equal dimension");
    for (std::size_t i = 0; i < lo.size(); ++i) {
        if (!std::isfinite(lo[i]) || !std::isfinite(hi[i]) || !(lo[i] < hi[i]))
            throw std::domain_error("Box: requires lo[i] < hi[i] on every axis");
    }
}

double Box::volume() const {
    double v = 1.0;
    for (int i = 0; i < dim(); ++i) v *= length(i);
    return v;
}

bool Box::contains(const Point& p, double slack) const {
    if (static_cast<int>(p.size()) != dim()) return false;
    for (int i = 0; i < dim(); ++i)
        if (p[i] < lo[i] - slack || p[i] > hi[i] + slack) return false;
    return true;
}

Grid::Grid(Box b, std::vector<int> nodes_per_axis)
    : box(std::move(b)), shape(std::move(nodes_per_axis)) {
    if (static_cast<int>(shape.size()) != box.dim())
        throw std::invalid_argument("Grid: shape size must match box dimension");
    for (int s : shape)
        if (s < 2) throw std::domain_error("Grid: need at least 2 nodes per axis");
}

Grid::Grid(Box b, int nodes_per_axis) {
    const int d = b.dim();
    *this = Grid(std::move(b), std::vector<int>(static_cast<std::size_t>(d), nodes_per_axis));
}

std::size_t Grid::size() const {
    std::size_t n = 1;
    for (int s : shape) n *= static_cast<std::size_t>(s);
    return n;
}

double Grid::max_spacing() const {
    double m = 0.0;
    for (int i = 0; i < dim(); ++i) m = std::max(m, spacing(i));
    return m;
}

std::size_t Grid::flat(const std::vector<int>& idx) const {
    std::size_t f = 0;
    for (int i = 0; i < dim(); ++i) f = f * shape[i] + static_cast<std::size_t>(idx[i]);
    return f;
}

std::vector<int> Grid::multi(std::size_t flat_index) const {
    std::vector<int> idx(dim());
    for (int i = dim() - 1; i >= 0; --i) {
        idx[i] = static_cast<int>(flat_index % shape[i]);
        flat_index /= shape[i];
    }
    return idx;
}

Point Grid::node(const std::vector<int>& idx) const {
    Point p(dim());
    for (int i = 0; i < dim(); ++i) p[i] = box.lo[i] + idx[i] * spacing(i);
    return p;
}

Point Grid::node(std::size_t flat_index) const { return node(multi(flat_index)); }

std::vector<int> Grid::nearest(const Point& p) const {
    std::vector<int> idx(dim());
    for (int i = 0; i < dim(); ++i) {
        int k = static_cast<int>(std::lround((p[i] - box.lo[i]) / spacing(i)));
        idx[i] = std::min(std::max(k, 0), shape[i] - 1);
    }
    return idx;
}

bool Grid::refines_to(const Grid& finer) const {
    if (dim() != finer.dim()) return false;
    const double tol = 1e-12;
    for (int i = 0; i < dim(); ++i) {
        if (std::abs(box.lo[i] - finer.box.lo[i]) > tol) return false;
        if (std::abs(box.hi[i] - finer.box.hi[i]) > tol) return false;
        if (finer.shape[i] != 2 * shape[i] - 1) return false;
    }
    return true;
}

} // namespace lplab
