#pragma once

#include <cstdint>
#include <random>

namespace roundtrip {

// Deterministic helpers on top of mt19937_64. std::uniform_int_distribution
// is implementation-defined, so seeded runs would not be reproducible across
// standard libraries; these are.

// Unbiased integer in [0, n) via rejection sampling.
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % n;
}

// Uniform double in [0, 1) with 53 bits of randomness.
inline double uniform_real(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform double in [lo, hi).
inline double uniform_real(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform_real(rng);
}

}  // namespace roundtrip
