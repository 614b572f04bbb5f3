#include <cmath>

#include "mvlab/mc_kernels.hpp"
#include "mvlab/splitmix.hpp"

namespace mvlab::mc {

// Reference kernel. Sample i uses stream positions 2i (x) and 2i+1 (y);
// the SIMD variants must reproduce these counts bit-exactly.
std::uint64_t count_hole_below_scalar(const HoleGeom& g, double lambda, std::uint64_t first,
                                      std::uint64_t count, std::uint64_t seed) {
  if (g.kind == HoleGeom::Kind::null_hole) return 0;
  std::uint64_t hits = 0;
  const double s = g.size;
  for (std::uint64_t i = first; i < first + count; ++i) {
    const double x = u01_from_bits(splitmix64_at(seed, 2 * i));
    const double y = u01_from_bits(splitmix64_at(seed, 2 * i + 1));
    if (y > lambda) continue;
    const double dx = x - 0.5;
    const double dy = y - 0.5;
    bool inside;
    if (g.kind == HoleGeom::Kind::square) {
      inside = dx > -s && dx < s && dy > -s && dy < s;
    } else {
      inside = dx * dx + dy * dy < s * s;
    }
    hits += inside ? 1 : 0;
  }
  return hits;
}

}  // namespace mvlab::mc
