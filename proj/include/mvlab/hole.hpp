#pragma once

#include <cstdint>
#include <stdexcept>

#include "mvlab/rational.hpp"

namespace mvlab {

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// The unit square with a centered hole removed. The square hole has side k
// (occupying [(1-k)/2,(1+k)/2]^2, area k^2) and is handled exactly over
// rationals; the disk hole has radius r < 1/2 (area pi r^2) and is handled
// in floating point. area_below(lambda) accumulates the hole area lying in
// {y <= lambda}; it is nondecreasing from 0 to the total hole area.
struct HoleProfile {
  enum class Kind { null_hole, square, disk };

  Kind kind = Kind::null_hole;
  Rational k;     // square side, 0 < k < 1
  double r = 0;   // disk radius, 0 < r < 1/2

  static HoleProfile null_hole() { return {}; }
  static HoleProfile square(const Rational& k);
  static HoleProfile disk(double r);

  bool exact() const { return kind != Kind::disk; }

  Rational total_area_exact() const;          // square/null only
  double total_area() const;

  // Mass of the perturbed square: M = 1 - hole area. phi maps [0,1] onto
  // [0,M].
  Rational mass_exact() const;
  double mass() const;

  Rational area_below_exact(const Rational& lambda) const;
  double area_below(double lambda) const;

  // phi(lambda) = lambda - area_below(lambda); DomainError outside [0,1].
  Rational phi_exact(const Rational& lambda) const;
  double phi(double lambda) const;

  // Unique lambda with phi(lambda) = t; DomainError outside [0,M].
  // Square/null holes invert the linear pieces exactly; the disk hole
  // bisects the strictly increasing phi down to residual <= 1e-12.
  Rational phi_inverse_exact(const Rational& t) const;
  double phi_inverse(double t) const;
};

// min(M, a+b) and M - x on [0,M].
inline Rational truncated_oplus(const Rational& m, const Rational& a, const Rational& b) {
  return rat_min(m, a + b);
}
inline Rational truncated_neg(const Rational& m, const Rational& x) { return m - x; }
inline double truncated_oplus(double m, double a, double b) {
  const double s = a + b;
  return s < m ? s : m;
}
inline double truncated_neg(double m, double x) { return m - x; }

// The operation the hole induces on [0,1]: conjugate the truncated sum on
// [0,M] by phi. Negation is conjugated the same way.
Rational induced_oplus_exact(const HoleProfile& p, const Rational& a, const Rational& b);
Rational induced_neg_exact(const HoleProfile& p, const Rational& a);
double induced_oplus(const HoleProfile& p, double a, double b);
double induced_neg(const HoleProfile& p, double a);

// Independent oracle for area_below: the fraction of `samples` points of Q,
// drawn from the counter-based stream for `seed`, that land inside the hole
// with y <= lambda. Identical (seed, samples) give identical estimates
// regardless of partitioning or SIMD backend.
double monte_carlo_hole_area(const HoleProfile& p, double lambda, std::uint64_t samples,
                             std::uint64_t seed);

}  // namespace mvlab
