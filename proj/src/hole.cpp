#include "mvlab/hole.hpp"

#include <cassert>
#include <cmath>

#include "mvlab/mc_kernels.hpp"

namespace mvlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_unit(const Rational& lambda) {
  if (!in_unit_interval(lambda)) throw DomainError("lambda outside [0,1]");
}

void require_unit(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("lambda outside [0,1]");
}

}  // namespace

HoleProfile HoleProfile::square(const Rational& k) {
  if (!(k > Rational(0) && k < Rational(1)))
    throw DomainError("square hole side must satisfy 0 < k < 1");
  HoleProfile p;
  p.kind = Kind::square;
  p.k = k;
  return p;
}

HoleProfile HoleProfile::disk(double r) {
  if (!(r > 0.0 && r < 0.5)) throw DomainError("disk hole radius must satisfy 0 < r < 1/2");
  HoleProfile p;
  p.kind = Kind::disk;
  p.r = r;
  return p;
}

Rational HoleProfile::total_area_exact() const {
  assert(kind != Kind::disk);
  return kind == Kind::square ? k * k : Rational(0);
}

double HoleProfile::total_area() const {
  switch (kind) {
    case Kind::null_hole: return 0.0;
    case Kind::square: return to_double(k) * to_double(k);
    case Kind::disk: return kPi * r * r;
  }
  return 0.0;
}

Rational HoleProfile::mass_exact() const { return Rational(1) - total_area_exact(); }

double HoleProfile::mass() const { return 1.0 - total_area(); }

// Square hole occupies the band (1-k)/2 < y < (1+k)/2 with width k, so the
// accumulation is piecewise linear in lambda.
Rational HoleProfile::area_below_exact(const Rational& lambda) const {
  require_unit(lambda);
  if (kind == Kind::null_hole) return Rational(0);
  assert(kind == Kind::square);
  const Rational band_lo = (Rational(1) - k) / Rational(2);
  const Rational band_hi = (Rational(1) + k) / Rational(2);
  if (lambda <= band_lo) return Rational(0);
  if (lambda >= band_hi) return k * k;
  return k * (lambda - band_lo);
}

// Disk hole: circular-segment area below the chord at height lambda, with
// d the signed offset from the center.
double HoleProfile::area_below(double lambda) const {
  require_unit(lambda);
  switch (kind) {
    case Kind::null_hole:
      return 0.0;
    case Kind::square:
      return to_double(area_below_exact(lambda));
    case Kind::disk: {
      const double d = lambda - 0.5;
      if (d <= -r) return 0.0;
      if (d >= r) return kPi * r * r;
      return r * r * (kPi / 2 + std::asin(d / r)) + d * std::sqrt(r * r - d * d);
    }
  }
  return 0.0;
}

Rational HoleProfile::phi_exact(const Rational& lambda) const {
  return lambda - area_below_exact(lambda);
}

double HoleProfile::phi(double lambda) const { return lambda - area_below(lambda); }

Rational HoleProfile::phi_inverse_exact(const Rational& t) const {
  if (!(t >= Rational(0) && t <= mass_exact())) throw DomainError("t outside [0, M]");
  if (kind == Kind::null_hole) return t;
  assert(kind == Kind::square);
  const Rational band_lo = (Rational(1) - k) / Rational(2);
  const Rational band_hi = (Rational(1) + k) / Rational(2);
  if (t <= band_lo) return t;
  // Above the band phi(lambda) = lambda - k^2; its value at the band top is
  // band_hi - k^2. Inside the band the slope is 1-k.
  const Rational t_band_hi = band_hi - k * k;
  if (t >= t_band_hi) return t + k * k;
  return band_lo + (t - band_lo) / (Rational(1) - k);
}

double HoleProfile::phi_inverse(double t) const {
  const double m = mass();
  if (!(t >= 0.0 && t <= m)) throw DomainError("t outside [0, M]");
  if (kind == Kind::null_hole) return t;
  if (kind == Kind::square) {
    // Same closed-form inversion as the exact path, in double.
    const double kd = to_double(k);
    const double band_lo = (1.0 - kd) / 2;
    const double t_band_hi = (1.0 + kd) / 2 - kd * kd;
    if (t <= band_lo) return t;
    if (t >= t_band_hi) return t + kd * kd;
    return band_lo + (t - band_lo) / (1.0 - kd);
  }
  double lo = 0.0;
  double hi = 1.0;
  // phi is strictly increasing with slope at most 1, so the residual is
  // bounded by the bracket width; 200 halvings are far beyond the target.
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double value = phi(mid);
    if (std::fabs(value - t) <= 0.5e-12) return mid;
    if (value < t)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

Rational induced_oplus_exact(const HoleProfile& p, const Rational& a, const Rational& b) {
  const Rational m = p.mass_exact();
  return p.phi_inverse_exact(truncated_oplus(m, p.phi_exact(a), p.phi_exact(b)));
}

Rational induced_neg_exact(const HoleProfile& p, const Rational& a) {
  return p.phi_inverse_exact(truncated_neg(p.mass_exact(), p.phi_exact(a)));
}

double induced_oplus(const HoleProfile& p, double a, double b) {
  const double m = p.mass();
  return p.phi_inverse(truncated_oplus(m, p.phi(a), p.phi(b)));
}

double induced_neg(const HoleProfile& p, double a) {
  return p.phi_inverse(truncated_neg(p.mass(), p.phi(a)));
}

double monte_carlo_hole_area(const HoleProfile& p, double lambda, std::uint64_t samples,
                             std::uint64_t seed) {
  require_unit(lambda);
  mc::HoleGeom geom;
  switch (p.kind) {
    case HoleProfile::Kind::null_hole:
      geom.kind = mc::HoleGeom::Kind::null_hole;
      break;
    case HoleProfile::Kind::square:
      geom.kind = mc::HoleGeom::Kind::square;
      geom.size = to_double(p.k) / 2;
      break;
    case HoleProfile::Kind::disk:
      geom.kind = mc::HoleGeom::Kind::disk;
      geom.size = p.r;
      break;
  }
  const std::uint64_t hits = mc::count_hole_below(geom, lambda, 0, samples, seed);
  return static_cast<double>(hits) / static_cast<double>(samples);
}

}  // namespace mvlab
