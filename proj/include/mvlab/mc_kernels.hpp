#pragma once

#include <cstdint>
#include <string>

namespace mvlab::mc {

// Geometry a point-classification kernel needs: hole kind plus one size
// parameter (half-side for the square, radius for the disk).
struct HoleGeom {
  enum class Kind : std::uint32_t { null_hole, square, disk };
  Kind kind = Kind::null_hole;
  double size = 0;  // square: k/2, disk: r
};

// Counts samples i in [first, first+count) whose point (x_i, y_i) lies
// inside the hole with y_i <= lambda. Sample coordinates come from
// splitmix64_at(seed, 2i) and (seed, 2i+1), so every backend sees the same
// points and the counts agree bit-exactly.
std::uint64_t count_hole_below_scalar(const HoleGeom& g, double lambda, std::uint64_t first,
                                      std::uint64_t count, std::uint64_t seed);

#if defined(MVLAB_HAVE_AVX2_KERNEL)
std::uint64_t count_hole_below_avx2(const HoleGeom& g, double lambda, std::uint64_t first,
                                    std::uint64_t count, std::uint64_t seed);
#endif

bool avx2_selected();
std::string backend_name();

// Runtime-dispatched entry point used by the Monte Carlo oracle.
std::uint64_t count_hole_below(const HoleGeom& g, double lambda, std::uint64_t first,
                               std::uint64_t count, std::uint64_t seed);

}  // namespace mvlab::mc
