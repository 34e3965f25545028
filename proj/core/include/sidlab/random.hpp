#pragma once

#include <cstdint>
#include <random>

namespace sidlab {

/// Generator behind every random draw in the library.
using Rng = std::mt19937_64;

/// Seed of stream `index` derived from `master` by splitmix64 on the pair,
/// so per-trial streams do not depend on evaluation order.
std::uint64_t split_seed(std::uint64_t master, std::uint64_t index);

/// Uniform double in [0, 1) from the top 53 bits of one draw. Used instead
/// of std::uniform_real_distribution, whose output is not pinned across
/// standard library implementations.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Uniform integer in [0, n) by rejection; n >= 1.
std::uint64_t uniform_below(Rng& rng, std::uint64_t n);

}  // namespace sidlab
