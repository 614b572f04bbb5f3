#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mvlab/rational.hpp"
#include "mvlab/splitmix.hpp"

using mvlab::Rational;

TEST_CASE("construction reduces to lowest terms with positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, 7).den == 1);
  CHECK(Rational(35, 50).num == 7);
  CHECK(Rational(35, 50).den == 10);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(7, 10) - Rational(2, 5) == Rational(3, 10));
  CHECK(Rational(3, 10) * Rational(2, 3) == Rational(1, 5));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
}

TEST_CASE("ordering by value") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(2, 3) > Rational(1, 2));
  CHECK(Rational(1, 2) <= Rational(2, 4));
  CHECK(mvlab::rat_min(Rational(3, 10), Rational(2, 5)) == Rational(3, 10));
  CHECK(mvlab::rat_max(Rational(3, 10), Rational(2, 5)) == Rational(2, 5));
  CHECK(mvlab::rat_abs(Rational(-1, 4)) == Rational(1, 4));
}

TEST_CASE("field identities on random fractions") {
  mvlab::SplitMix64 stream(7);
  for (int i = 0; i < 500; ++i) {
    const auto draw = [&] {
      const std::int64_t den = 1 + static_cast<std::int64_t>(stream.next() % 60);
      const std::int64_t num = static_cast<std::int64_t>(stream.next() % 121) - 60;
      return Rational(num, den);
    };
    const Rational a = draw();
    const Rational b = draw();
    const Rational c = draw();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
  }
}

TEST_CASE("rendering") {
  CHECK(mvlab::to_string(Rational(0)) == "0");
  CHECK(mvlab::to_string(Rational(1)) == "1");
  CHECK(mvlab::to_string(Rational(3, 10)) == "3/10");
  CHECK(mvlab::to_string(Rational(-1, 4)) == "-1/4");
}

TEST_CASE("parsing fractions and decimals") {
  CHECK(mvlab::parse_rational("1/2") == Rational(1, 2));
  CHECK(mvlab::parse_rational("0.25") == Rational(1, 4));
  CHECK(mvlab::parse_rational("0.4") == Rational(2, 5));
  CHECK(mvlab::parse_rational("1") == Rational(1));
  CHECK(mvlab::parse_rational("0.0001") == Rational(1, 10000));
  CHECK(mvlab::parse_rational("-0.5") == Rational(-1, 2));
  CHECK_FALSE(mvlab::parse_rational("abc").has_value());
  CHECK_FALSE(mvlab::parse_rational("1/0").has_value());
  CHECK_FALSE(mvlab::parse_rational("").has_value());
}

TEST_CASE("components that cannot narrow to 64 bits throw instead of wrapping") {
  const Rational big(1, 4'000'000'000'000'000'000LL);
  CHECK_THROWS_AS(big * big, std::overflow_error);
  // Reduction rescues representable values.
  CHECK(Rational(4'000'000'000'000'000'000LL, 8'000'000'000'000'000'000LL) == Rational(1, 2));
}

TEST_CASE("unit interval guard") {
  CHECK(mvlab::in_unit_interval(Rational(0)));
  CHECK(mvlab::in_unit_interval(Rational(1)));
  CHECK(mvlab::in_unit_interval(Rational(1, 2)));
  CHECK_FALSE(mvlab::in_unit_interval(Rational(-1, 10)));
  CHECK_FALSE(mvlab::in_unit_interval(Rational(11, 10)));
}
