#pragma once

#include <cstdint>

namespace ace::random {

// Counter-based streams built on SplitMix64 (Steele, Lea, Flood 2014):
// draw i of stream `seed` is the (i+1)-th output of a SplitMix64 generator
// whose state starts at `seed`, i.e. mix64(seed + (i+1) * 0x9e3779b97f4a7c15).
// Any draw can be computed independently, which keeps generated images
// reproducible regardless of traversal order.

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t draw(std::uint64_t seed, std::uint64_t index) { return mix64(seed + (index + 1) * kGamma); }

/// Uniform double in [0,1) from the top 53 bits of draw(seed, index).
constexpr double uniform(std::uint64_t seed, std::uint64_t index) {
    return static_cast<double>(draw(seed, index) >> 11) * 0x1.0p-53;
}

/// Standard normal sample number `index` of stream `seed`: Box-Muller (cosine
/// branch) on uniforms 2*index and 2*index+1.
double gaussian(std::uint64_t seed, std::uint64_t index);

/// Derives an independent stream seed for a named sub-purpose.
constexpr std::uint64_t substream(std::uint64_t seed, std::uint64_t tag) { return mix64(seed ^ mix64(tag + kGamma)); }

} // namespace ace::random
