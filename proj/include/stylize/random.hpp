#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace stylize {

// Seeded random stream. All draws below are implemented directly on the raw
// mt19937_64 output instead of <random> distributions, whose results are
// implementation-defined; this keeps every sampled crop, warp, and weight
// reproducible from a seed regardless of the standard library.
using Rng = std::mt19937_64;

namespace rnd {

// Uniform double in [0, 1).
inline double canonical(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(Rng& rng, double lo, double hi) {
    return lo + (hi - lo) * canonical(rng);
}

// Uniform integer in [lo, hi] via rejection, unbiased.
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<std::int64_t>(rng());  // full range
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return lo + static_cast<std::int64_t>(draw % range);
}

inline bool bernoulli(Rng& rng, double p) { return canonical(rng) < p; }

// Standard normal via Box-Muller (one value per call; the pair's second half
// is discarded to keep the draw count predictable).
inline double normal(Rng& rng) {
    double u1 = canonical(rng);
    double u2 = canonical(rng);
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

// k distinct values from {0, ..., n-1}, ascending. Partial Fisher-Yates.
std::vector<int> sample_without_replacement(Rng& rng, int n, int k);

// FNV-1a over bytes, for content-keyed seeding and parameter hashing.
std::uint64_t fnv1a(const void* data, size_t nbytes, std::uint64_t seed = 0xcbf29ce484222325ull);
std::uint64_t fnv1a(const std::string& s, std::uint64_t seed = 0xcbf29ce484222325ull);

}  // namespace rnd
}  // namespace stylize
