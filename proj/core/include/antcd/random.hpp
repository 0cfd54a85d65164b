#pragma once

#include <cstddef>
#include <random>

namespace antcd {

using Rng = std::mt19937_64;

/// Uniform integer in [0, n) by multiply-shift; identical across standard
/// libraries, unlike std::uniform_int_distribution. Requires n > 0.
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  __extension__ using Wide = unsigned __int128;
  const auto wide = static_cast<Wide>(rng()) * n;
  return static_cast<std::size_t>(wide >> 64);
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace antcd
