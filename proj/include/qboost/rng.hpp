#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace qboost {

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

// Seed of an independent substream identified by a path of integer tags,
// e.g. derive_seed(seed, {point_index, arm_tag}).
std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> path) noexcept;

// Bit-reproducible stream of uniforms and Bernoulli draws. The std
// distribution adaptors are implementation-defined, so doubles are built
// directly from the top 53 bits of the engine output.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    // Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Exact at the ends: p = 0 never succeeds, p = 1 always does.
    bool bernoulli(double p) { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace qboost
