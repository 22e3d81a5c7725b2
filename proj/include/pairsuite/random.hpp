#pragma once

#include <cstdint>
#include <random>

namespace pairsuite {

/// All randomized paths take this engine explicitly. mt19937_64 is fully
/// specified by the standard, so streams are portable across toolchains.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). Uses rejection sampling on the raw engine
/// output instead of std::uniform_int_distribution, whose algorithm is
/// implementation-defined.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return draw % bound;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// SplitMix64 finalizer.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Child seed for stream `index` of a master seed:
/// splitmix64(splitmix64(master) ^ index). Independent of evaluation order,
/// so trial loops can run in any order or in parallel.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ index);
}

}  // namespace pairsuite
