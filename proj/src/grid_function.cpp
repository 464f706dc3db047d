#include "lplab/grid_function.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lplab {

GridFunction::GridFunction(Grid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != grid_.size())
        throw std::invalid_argument("GridFunction: value count must match grid size");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i]) || values_[i] < 0.0)
            throw std::domain_error("GridFunction: values must be finite and nonnegative");
        if (values_[i] > 0.0) support_.push_back(i);
    }
}

GridFunction GridFunction::sample(const Grid& grid,
                                  const std::function<double(const Point&)>& f) {
    std::vector<double> vals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = f(grid.node(i));
    return GridFunction(grid, std::move(vals));
}

double GridFunction::interpolate(const Point& p) const {
    const int n = dim();
    if (static_cast<int>(p.size()) != n)
        throw std::invalid_argument("GridFunction::interpolate: dimension mismatch");
    std::vector<int> base(n);
    std::vector<double> frac(n);
    for (int i = 0; i < n; ++i) {
        const double t = (p[i] - grid_.box.lo[i]) / grid_.spacing(i);
        if (t < -1e-12 || t > grid_.shape[i] - 1 + 1e-12) return 0.0;
        int k = static_cast<int>(std::floor(t));
        k = std::min(std::max(k, 0), grid_.shape[i] - 2);
        base[i] = k;
        frac[i] = std::min(std::max(t - k, 0.0), 1.0);
    }
    // accumulate over the 2^n cell corners
    double acc = 0.0;
    std::vector<int> idx(n);
    for (unsigned corner = 0; corner < (1u << n); ++corner) {
        double w = 1.0;
        for (int i = 0; i < n; ++i) {
            const bool high = corner & (1u << i);
            idx[i] = base[i] + (high ? 1 : 0);
            w *= high ? frac[i] : 1.0 - frac[i];
        }
        if (w > 0.0) acc += w * values_[grid_.flat(idx)];
    }
    return acc;
}

bool GridFunction::in_support(const Point& p) const {
    if (!grid_.box.contains(p, 0.5 * grid_.max_spacing() + 1e-12)) return false;
    if (interpolate(p) > 0.0) return true;
    const std::vector<int> near = grid_.nearest(p);
    const Point q = grid_.node(near);
    for (int i = 0; i < dim(); ++i)
        if (std::abs(p[i] - q[i]) > 0.5 * grid_.spacing(i) + 1e-12) return false;
    return values_[grid_.flat(near)] > 0.0;
}

std::optional<Box> GridFunction::support_box() const {
    if (support_.empty()) return std::nullopt;
    const int n = dim();
    std::vector<double> lo(n, std::numeric_limits<double>::infinity());
    std::vector<double> hi(n, -std::numeric_limits<double>::infinity());
    for (std::size_t f : support_) {
        const Point p = grid_.node(f);
        for (int i = 0; i < n; ++i) {
            lo[i] = std::min(lo[i], p[i]);
            hi[i] = std::max(hi[i], p[i]);
        }
    }
    // widen degenerate axes by one spacing so the result is a valid Box
    for (int i = 0; i < n; ++i) {
        if (!(lo[i] < hi[i])) {
            lo[i] -= 0.5 * grid_.spacing(i);
            hi[i] += 0.5 * grid_.spacing(i);
        }
    }
    return Box(std::move(lo), std::move(hi));
}

double GridFunction::max_value() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, v);
    return m;
}

double GridFunction::integrate() const {
    const int n = dim();
    double cell = 1.0;
    for (int i = 0; i < n; ++i) cell *= grid_.spacing(i);
    double acc = 0.0;
    for (std::size_t f : support_) {
        const std::vector<int> idx = grid_.multi(f);
        double w = 1.0;
        for (int i = 0; i < n; ++i)
            if (idx[i] == 0 || idx[i] == grid_.shape[i] - 1) w *= 0.5;
        acc += w * values_[f];
    }
    return acc * cell;
}

double integrate_grid(const GridFunction& f) { return f.integrate(); }

} // namespace lplab
