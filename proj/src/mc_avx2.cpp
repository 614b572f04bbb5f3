// AVX2 variant of the point-classification kernel. Four samples per
// iteration; the counter-based stream makes every lane independent of
// evaluation order, so the counts match the scalar kernel bit-exactly.

#include "mvlab/mc_kernels.hpp"

#if defined(MVLAB_HAVE_AVX2_KERNEL)

#include <immintrin.h>

#include "mvlab/splitmix.hpp"

namespace mvlab::mc {

namespace {

// 64x64 -> low 64 multiply from 32-bit partial products.
inline __m256i mul64(__m256i a, __m256i b) {
  const __m256i lo = _mm256_mul_epu32(a, b);
  const __m256i ahi = _mm256_srli_epi64(a, 32);
  const __m256i bhi = _mm256_srli_epi64(b, 32);
  const __m256i cross =
      _mm256_add_epi64(_mm256_mul_epu32(ahi, b), _mm256_mul_epu32(a, bhi));
  return _mm256_add_epi64(lo, _mm256_slli_epi64(cross, 32));
}

inline __m256i mix(__m256i z) {
  z = mul64(_mm256_xor_si256(z, _mm256_srli_epi64(z, 30)),
            _mm256_set1_epi64x(static_cast<long long>(0xBF58476D1CE4E5B9ull)));
  z = mul64(_mm256_xor_si256(z, _mm256_srli_epi64(z, 27)),
            _mm256_set1_epi64x(static_cast<long long>(0x94D049BB133111EBull)));
  return _mm256_xor_si256(z, _mm256_srli_epi64(z, 31));
}

// Top 52 bits to [0,1), matching u01_from_bits exactly: OR the mantissa
// into 2^52, subtract 2^52, scale by 2^-52 (all exact operations).
inline __m256d u01(__m256i z) {
  const __m256i mant = _mm256_srli_epi64(z, 12);
  const __m256i magic = _mm256_set1_epi64x(0x4330000000000000ll);
  const __m256d d = _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(mant, magic)),
                                  _mm256_set1_pd(0x1p52));
  return _mm256_mul_pd(d, _mm256_set1_pd(0x1p-52));
}

}  // namespace

std::uint64_t count_hole_below_avx2(const HoleGeom& g, double lambda, std::uint64_t first,
                                    std::uint64_t count, std::uint64_t seed) {
  if (g.kind == HoleGeom::Kind::null_hole) return 0;

  constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
  const std::uint64_t blocks = count / 4;
  const double s = g.size;

  // Lane l of block j handles sample i = first + 4j + l; the pre-mix states
  // are seed + (2i+1)*golden for x and seed + (2i+2)*golden for y.
  __m256i xstate = _mm256_set_epi64x(
      static_cast<long long>(seed + (2 * (first + 3) + 1) * kGolden),
      static_cast<long long>(seed + (2 * (first + 2) + 1) * kGolden),
      static_cast<long long>(seed + (2 * (first + 1) + 1) * kGolden),
      static_cast<long long>(seed + (2 * first + 1) * kGolden));
  const __m256i step = _mm256_set1_epi64x(static_cast<long long>(8 * kGolden));
  const __m256i ystep = _mm256_set1_epi64x(static_cast<long long>(kGolden));

  const __m256d vlambda = _mm256_set1_pd(lambda);
  const __m256d vhalf = _mm256_set1_pd(0.5);
  const __m256d vs = _mm256_set1_pd(s);
  const __m256d vneg_s = _mm256_set1_pd(-s);
  const __m256d vs2 = _mm256_set1_pd(s * s);

  __m256i acc = _mm256_setzero_si256();
  for (std::uint64_t j = 0; j < blocks; ++j) {
    const __m256d x = u01(mix(xstate));
    const __m256d y = u01(mix(_mm256_add_epi64(xstate, ystep)));
    xstate = _mm256_add_epi64(xstate, step);

    const __m256d below = _mm256_cmp_pd(y, vlambda, _CMP_LE_OQ);
    const __m256d dx = _mm256_sub_pd(x, vhalf);
    const __m256d dy = _mm256_sub_pd(y, vhalf);
    __m256d inside;
    if (g.kind == HoleGeom::Kind::square) {
      inside = _mm256_and_pd(
          _mm256_and_pd(_mm256_cmp_pd(dx, vneg_s, _CMP_GT_OQ), _mm256_cmp_pd(dx, vs, _CMP_LT_OQ)),
          _mm256_and_pd(_mm256_cmp_pd(dy, vneg_s, _CMP_GT_OQ), _mm256_cmp_pd(dy, vs, _CMP_LT_OQ)));
    } else {
      const __m256d dist2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
      inside = _mm256_cmp_pd(dist2, vs2, _CMP_LT_OQ);
    }
    // Hit lanes are all-ones (-1 as int64); subtracting accumulates counts.
    acc = _mm256_sub_epi64(acc, _mm256_castpd_si256(_mm256_and_pd(below, inside)));
  }

  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t hits = lanes[0] + lanes[1] + lanes[2] + lanes[3];

  const std::uint64_t done = blocks * 4;
  if (done < count)
    hits += count_hole_below_scalar(g, lambda, first + done, count - done, seed);
  return hits;
}

}  // namespace mvlab::mc

#endif  // MVLAB_HAVE_AVX2_KERNEL
