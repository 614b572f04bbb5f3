#pragma once

#include <cstdint>

namespace mvlab {

// Counter-based splitmix64: the value at position n is a pure function of
// (seed, n), so sequential, partitioned, and SIMD-lane evaluation all see
// the same stream.
constexpr std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t n) {
  std::uint64_t z = seed + (n + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Top 52 bits scaled into [0,1); the conversion is exact in double.
constexpr double u01_from_bits(std::uint64_t z) {
  return static_cast<double>(z >> 12) * 0x1p-52;
}

struct SplitMix64 {
  std::uint64_t seed = 0;
  std::uint64_t pos = 0;

  explicit SplitMix64(std::uint64_t s) : seed(s) {}
  std::uint64_t next() { return splitmix64_at(seed, pos++); }
  double next_u01() { return u01_from_bits(next()); }
};

}  // namespace mvlab
