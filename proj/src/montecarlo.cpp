#include "lplab/montecarlo.hpp"

#include <cmath>
#include <stdexcept>

namespace lplab {

McEstimate mc_volume(const std::function<bool(const Point&)>& membership, const Box& box,
                     std::int64_t samples, RandomSource rng) {
    if (samples < 1) throw std::domain_error("mc_volume: samples must be >= 1");
    const double vol = box.volume();
    if (!(vol > 0.0)) throw std::domain_error("mc_volume: degenerate box");

    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < samples; ++i)
        if (membership(rng.point_in(box))) ++hits;

    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    McEstimate out;
    out.estimate = p * vol;
    out.stderr_ = vol * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    out.samples = samples;
    out.hits = hits;
    return out;
}

std::vector<std::pair<int, double>> refinement_sweep(const std::function<double(int)>& task,
                                                     const std::vector<int>& resolutions) {
    if (resolutions.empty()) throw std::invalid_argument("refinement_sweep: empty resolution list");
    for (std::size_t i = 1; i < resolutions.size(); ++i) {
        if (resolutions[i] != 2 * resolutions[i - 1] - 1)
            throw std::invalid_argument(
                "refinement_sweep: resolutions must be nested (r' = 2r - 1)");
    }
    std::vector<std::pair<int, double>> out;
    out.reserve(resolutions.size());
    for (int r : resolutions) out.emplace_back(r, task(r));
    return out;
}

} // namespace lplab
