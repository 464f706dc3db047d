#ifndef LPLAB_RNG_HPP
#define LPLAB_RNG_HPP

#include <cstdint>

#include "lplab/geometry.hpp"

namespace lplab {

/// Deterministic, platform-independent random stream.
///
/// The generator is splitmix64 (Steele, Lea, Flood 2014): a fixed odd
/// increment followed by a 64-bit finalizer. Identical seeds produce
/// identical streams on every platform; substreams for parallel tasks are
/// derived by hashing (seed, task index) so sweeps stay reproducible
/// regardless of scheduling.
class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01();

    /// Uniform double in [a, b).
    double uniform(double a, double b);

    /// Uniform point in a box.
    Point point_in(const Box& box);

    /// Independent substream for task `index` under the same seed.
    RandomSource substream(std::uint64_t index) const;

    std::uint64_t seed() const { return state_; }

  private:
    std::uint64_t state_;
};

} // namespace lplab

#endif
