#include "lplab/rng.hpp"

namespace lplab {

namespace {
std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
} // namespace

std::uint64_t RandomSource::next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
}

double RandomSource::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomSource::uniform(double a, double b) { return a + (b - a) * uniform01(); }

Point RandomSource::point_in(const Box& box) {
    Point p(box.dim());
    for (int i = 0; i < box.dim(); ++i) p[i] = uniform(box.lo[i], box.hi[i]);
    return p;
}

RandomSource RandomSource::substream(std::uint64_t index) const {
    return RandomSource(mix(state_ ^ mix(index + 0x632be59bd9b4e019ULL)));
}

} // namespace lplab
