#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace alcache {

// std::uniform_int_distribution and std::shuffle are implementation-defined,
// so seeded sequences are derived from the raw engine output instead. This
// keeps workloads and RANDOM eviction identical across standard libraries.
using Rng = std::mt19937_64;

/// Uniform index in [0, n). n must be > 0.
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  const std::uint64_t bound = n;
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return static_cast<std::size_t>(x % bound);
}

/// Uniform real in [0, 1) with 53 bits of precision.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <class T>
void shuffle(std::vector<T>& xs, Rng& rng) {
  for (std::size_t i = xs.size(); i > 1; --i) {
    std::swap(xs[i - 1], xs[uniform_index(rng, i)]);
  }
}

}  // namespace alcache
