#ifndef LPLAB_MONTECARLO_HPP
#define LPLAB_MONTECARLO_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "lplab/geometry.hpp"
#include "lplab/rng.hpp"

namespace lplab {

struct McEstimate {
    double estimate = 0.0;
    double stderr_ = 0.0;
    std::int64_t samples = 0;
    std::int64_t hits = 0;
};

/// Hit-or-miss volume estimate of {x in box : membership(x)}.
/// estimate = hit fraction * box volume,
/// stderr   = box volume * sqrt(p(1-p)/samples).
/// Deterministic under a fixed RandomSource seed.
McEstimate mc_volume(const std::function<bool(const Point&)>& membership, const Box& box,
                     std::int64_t samples, RandomSource rng);

/// Evaluate `task` at a chain of nested grid resolutions (each step doubles
/// the intervals: r' = 2r - 1). Throws std::invalid_argument on a
/// non-nested or non-increasing chain.
std::vector<std::pair<int, double>> refinement_sweep(const std::function<double(int)>& task,
                                                     const std::vector<int>& resolutions);

} // namespace lplab

#endif
