#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mvlab/mc_kernels.hpp"

using namespace mvlab::mc;

namespace {

const HoleGeom kSquare{HoleGeom::Kind::square, 0.25};
const HoleGeom kDisk{HoleGeom::Kind::disk, 0.25};
const HoleGeom kNull{HoleGeom::Kind::null_hole, 0};

}  // namespace

TEST_CASE("scalar kernel is deterministic and seed-sensitive") {
  const auto a = count_hole_below_scalar(kSquare, 0.7, 0, 100'000, 1);
  CHECK(a == count_hole_below_scalar(kSquare, 0.7, 0, 100'000, 1));
  CHECK(a != count_hole_below_scalar(kSquare, 0.7, 0, 100'000, 2));
  CHECK(count_hole_below_scalar(kNull, 1.0, 0, 100'000, 1) == 0);
  CHECK(count_hole_below_scalar(kSquare, 0.0, 0, 100'000, 1) == 0);
}

TEST_CASE("partitioned evaluation matches a single sweep") {
  // Counter-based sampling: splitting the index range cannot change counts.
  const std::uint64_t whole = count_hole_below_scalar(kDisk, 0.6, 0, 40'000, 99);
  const std::uint64_t parts = count_hole_below_scalar(kDisk, 0.6, 0, 13'337, 99) +
                              count_hole_below_scalar(kDisk, 0.6, 13'337, 26'663, 99);
  CHECK(whole == parts);
}

#if defined(MVLAB_HAVE_AVX2_KERNEL)
TEST_CASE("avx2 kernel matches the scalar reference bit-exactly") {
  if (!avx2_selected()) {
    MESSAGE("avx2 unavailable on this host; dispatch covers the scalar path");
    return;
  }
  for (const HoleGeom& geom : {kSquare, kDisk}) {
    for (double lambda : {0.0, 0.1, 0.37, 0.5, 0.75, 1.0}) {
      for (std::uint64_t seed : {0ull, 1ull, 42ull, 0xDEADBEEFull}) {
        // Counts not divisible by the lane width exercise the tail path.
        for (std::uint64_t count : {1ull, 3ull, 4ull, 1021ull, 65'536ull, 100'003ull}) {
          CHECK(count_hole_below_scalar(geom, lambda, 0, count, seed) ==
                count_hole_below_avx2(geom, lambda, 0, count, seed));
        }
      }
    }
  }
}

TEST_CASE("avx2 kernel honors the index offset") {
  if (!avx2_selected()) return;
  CHECK(count_hole_below_avx2(kSquare, 0.9, 777, 50'000, 3) ==
        count_hole_below_scalar(kSquare, 0.9, 777, 50'000, 3));
}
#endif

TEST_CASE("dispatch agrees with the scalar reference") {
  CHECK(count_hole_below(kSquare, 0.8, 0, 123'457, 7) ==
        count_hole_below_scalar(kSquare, 0.8, 0, 123'457, 7));
  CHECK((backend_name() == "avx2" || backend_name() == "scalar"));
}

TEST_CASE("hit rate lands near the geometric area") {
  // k = 0.5 square: area 0.25; r = 0.25 disk: area pi/16.
  const std::uint64_t n = 1'000'000;
  const double square_rate =
      static_cast<double>(count_hole_below(kSquare, 1.0, 0, n, 11)) / static_cast<double>(n);
  CHECK(square_rate == doctest::Approx(0.25).epsilon(0.02));
  const double disk_rate =
      static_cast<double>(count_hole_below(kDisk, 1.0, 0, n, 11)) / static_cast<double>(n);
  CHECK(disk_rate == doctest::Approx(3.14159265 / 16).epsilon(0.02));
}
