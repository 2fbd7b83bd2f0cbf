#pragma once
#include <cstdint>

namespace grt {

// splitmix64: tiny, platform-independent generator. Every seeded draw in the
// toolkit goes through this so that identical seeds give identical artifacts
// on any machine (std::mt19937 + distributions would not guarantee that).
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0,1): top 53 bits scaled, exact in double
    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // uniform integer in [0, bound), bound > 0; rejection-free modulo is fine
    // here (bounds are tiny compared to 2^64, bias < 2^-50)
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

} // namespace grt
