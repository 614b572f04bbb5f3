#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mvlab {

// Exact fraction on 64-bit components, always stored reduced with den > 0.
// Carrier parameters live in [0,1] with small denominators; intermediates
// still go through __int128 and narrow with a range check so oversized CLI
// denominators fail loudly instead of wrapping.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num(n), den(1) {}
  constexpr Rational(__int128 n, __int128 d) {
    assert(d != 0);
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 limit = INT64_MAX;
    if (n > limit || n < -limit || d > limit)
      throw std::overflow_error("rational exceeds 64-bit components");
    num = static_cast<std::int64_t>(n);
    den = static_cast<std::int64_t>(d);
  }

  friend constexpr bool operator==(const Rational&, const Rational&) = default;
  friend constexpr std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    const __int128 l = static_cast<__int128>(x.num) * y.den;
    const __int128 r = static_cast<__int128>(y.num) * x.den;
    return l < r ? std::strong_ordering::less
         : l > r ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  friend constexpr Rational operator+(const Rational& x, const Rational& y) {
    return Rational(static_cast<__int128>(x.num) * y.den + static_cast<__int128>(y.num) * x.den,
                    static_cast<__int128>(x.den) * y.den);
  }
  friend constexpr Rational operator-(const Rational& x, const Rational& y) {
    return Rational(static_cast<__int128>(x.num) * y.den - static_cast<__int128>(y.num) * x.den,
                    static_cast<__int128>(x.den) * y.den);
  }
  friend constexpr Rational operator*(const Rational& x, const Rational& y) {
    return Rational(static_cast<__int128>(x.num) * y.num, static_cast<__int128>(x.den) * y.den);
  }
  friend constexpr Rational operator/(const Rational& x, const Rational& y) {
    assert(y.num != 0);
    return Rational(static_cast<__int128>(x.num) * y.den, static_cast<__int128>(x.den) * y.num);
  }
  friend constexpr Rational operator-(const Rational& x) { return Rational(-x.num, x.den); }

 private:
  static constexpr __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
};

constexpr Rational rat_min(const Rational& x, const Rational& y) { return x < y ? x : y; }
constexpr Rational rat_max(const Rational& x, const Rational& y) { return x < y ? y : x; }
constexpr Rational rat_abs(const Rational& x) { return x.num < 0 ? -x : x; }

constexpr bool in_unit_interval(const Rational& x) {
  return x >= Rational(0) && x <= Rational(1);
}

inline double to_double(const Rational& x) {
  return static_cast<double>(x.num) / static_cast<double>(x.den);
}

// "0", "1", "7/10"
inline std::string to_string(const Rational& x) {
  if (x.den == 1) return std::to_string(x.num);
  return std::to_string(x.num) + "/" + std::to_string(x.den);
}

// Accepts "3/4", "0.25", "1", "1e-2" is NOT accepted (plain decimals and
// fractions only, so CLI parameters stay exact).
std::optional<Rational> parse_rational(std::string_view text);

}  // namespace mvlab
