#pragma once

#include <cstdint>

namespace quasimix {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen as the report-embedded PRNG
// because the algorithm is a two-line spec that any language can reproduce
// bit-for-bit, which keeps seeded sweeps comparable across reimplementations.
inline constexpr const char* kPrngAlgorithm = "splitmix64";

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound).
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

// Decorrelated per-trial seed: trial t of a sweep seeded with s draws from
// SplitMix64(stream_seed(s, t)). The finalizer round breaks the arithmetic
// relation between neighbouring trial states.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 g(seed ^ (0xA0761D6478BD642FULL * (stream + 1)));
    return g.next();
}

} // namespace quasimix
