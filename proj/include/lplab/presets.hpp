#ifndef LPLAB_PRESETS_HPP
#define LPLAB_PRESETS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lplab/verifiers.hpp"

namespace lplab {

// canned 1-D shapes used by presets and tests

/// Indicator of [a, b] sampled at `resolution` nodes (all ones on its box).
GridFunction indicator_fn(double a, double b, int resolution);

/// Tent of the given height, peaked at peak_x, vanishing at a and b.
GridFunction tent_fn(double a, double b, double peak_x, double height, int resolution);

/// max(0, height * (1 - ((x - center)/halfwidth)^2)) on [center +- halfwidth].
GridFunction parabola_fn(double center, double halfwidth, double height, int resolution);

/// height * exp(-((x - center)/sigma)^2 / 2) on [center +- halfwidth].
GridFunction gaussian_fn(double center, double sigma, double height, double halfwidth,
                         int resolution);

/// Smallest h with h((1-l)x + ly) >= f(x)^{1-l} g(y)^l, built on a fresh grid
/// covering the combined supports and then inflated by `inflate` to absorb
/// interpolation slack.
GridFunction pl_minimal_h(const GridFunction& f, const GridFunction& g, double lambda,
                          int resolution, double inflate = 1.0);

struct Preset {
    std::string name;
    std::string description;
};

const std::vector<Preset>& preset_catalog();
bool is_preset(const std::string& name);

struct PresetRun {
    std::vector<VerificationReport> reports;
    std::optional<GridFunction> profile;  // a constructed h, when one exists
};

/// Runs a named preset deterministically under `seed`.
/// Throws std::invalid_argument for unknown names.
PresetRun run_preset(const std::string& name, std::uint64_t seed);

} // namespace lplab

#endif
