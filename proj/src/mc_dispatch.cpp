#include "mvlab/mc_kernels.hpp"

namespace mvlab::mc {

bool avx2_selected() {
#if defined(MVLAB_HAVE_AVX2_KERNEL) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::string backend_name() { return avx2_selected() ? "avx2" : "scalar"; }

std::uint64_t count_hole_below(const HoleGeom& g, double lambda, std::uint64_t first,
                               std::uint64_t count, std::uint64_t seed) {
#if defined(MVLAB_HAVE_AVX2_KERNEL)
  if (avx2_selected()) return count_hole_below_avx2(g, lambda, first, count, seed);
#endif
  return count_hole_below_scalar(g, lambda, first, count, seed);
}

}  // namespace mvlab::mc
