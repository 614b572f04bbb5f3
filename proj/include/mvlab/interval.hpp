#pragma once

#include <cassert>

#include "mvlab/elements.hpp"

namespace mvlab {

// ----- Lukasiewicz arithmetic on [0,1] -----

inline Rational lukasiewicz_oplus(const Rational& x, const Rational& y) {
  return rat_min(x + y, Rational(1));
}

inline Rational lukasiewicz_neg(const Rational& x) { return Rational(1) - x; }

// ----- Tagged subintervals of [0,1] -----

inline TaggedInterval lower(const Rational& a) { return {Orientation::lower, a}; }
inline TaggedInterval upper(const Rational& a) { return {Orientation::upper, a}; }

inline Rational measure(const TaggedInterval& x) { return x.param; }

inline Rational lo_endpoint(const TaggedInterval& x) {
  return x.orient == Orientation::lower ? Rational(0) : Rational(1) - x.param;
}

inline Rational hi_endpoint(const TaggedInterval& x) {
  return x.orient == Orientation::lower ? x.param : Rational(1);
}

// The set-level structure is what induces the arithmetic, so the measures
// below are computed from interval endpoints, never from min(a+b,1).

// mu([0,a] u [1-b,1]); the intervals overlap (or touch) iff a >= 1-b, in
// which case the union is all of [0,1].
inline Rational union_measure(const TaggedInterval& a, const TaggedInterval& b) {
  assert(a.orient == Orientation::lower && b.orient == Orientation::upper);
  const Rational left_hi = hi_endpoint(a);
  const Rational right_lo = lo_endpoint(b);
  if (left_hi >= right_lo) return Rational(1);
  return (left_hi - lo_endpoint(a)) + (hi_endpoint(b) - right_lo);
}

// mu([0,a] n [1-b,1]) = max(0, a - (1-b)).
inline Rational intersection_measure(const TaggedInterval& a, const TaggedInterval& b) {
  assert(a.orient == Orientation::lower && b.orient == Orientation::upper);
  const Rational lo = rat_max(lo_endpoint(a), lo_endpoint(b));
  const Rational hi = rat_min(hi_endpoint(a), hi_endpoint(b));
  return hi >= lo ? hi - lo : Rational(0);
}

// Measure-preserving swap a^0 <-> a^1; self-inverse.
inline TaggedInterval j_swap(const TaggedInterval& x) {
  return {x.orient == Orientation::lower ? Orientation::upper : Orientation::lower, x.param};
}

// a^0 (+) b^0 = [mu(a^0 u b^1)]^0
inline TaggedInterval oplus_i0(const TaggedInterval& a, const TaggedInterval& b) {
  assert(a.orient == Orientation::lower && b.orient == Orientation::lower);
  return lower(union_measure(a, j_swap(b)));
}

// a^0 (.) b^0 = [mu(a^0 n b^1)]^0
inline TaggedInterval odot_i0(const TaggedInterval& a, const TaggedInterval& b) {
  assert(a.orient == Orientation::lower && b.orient == Orientation::lower);
  return lower(intersection_measure(a, j_swap(b)));
}

// i(a^0) = [mu(complement of [0,a])]^0 = (1-a)^0
inline TaggedInterval involution_i(const TaggedInterval& a) {
  assert(a.orient == Orientation::lower);
  return lower(Rational(1) - a.param);
}

// a^1 (+)1 b^1 = [mu([1-a,1] u [0,1-b])]^1: full when a >= b, else the two
// pieces are disjoint with total measure a + (1-b).
inline TaggedInterval oplus_i1(const TaggedInterval& a, const TaggedInterval& b) {
  assert(a.orient == Orientation::upper && b.orient == Orientation::upper);
  const Rational piece_lo = Rational(1) - b.param;  // [0, 1-b]
  const Rational piece_hi = Rational(1) - a.param;  // [1-a, 1]
  if (piece_lo >= piece_hi) return upper(Rational(1));
  return upper(piece_lo + a.param);
}

inline TaggedInterval neg_i1(const TaggedInterval& b) {
  assert(b.orient == Orientation::upper);
  return upper(Rational(1) - b.param);
}

// ----- The star operation on I-hat = I0 u I1 -----

// Under denoted-set equality the only coincidence is 1^0 = 1^1 = [0,1];
// the canonical form of the full interval is Lower 1.
inline TaggedInterval star_canonical(const TaggedInterval& x) {
  if (x.orient == Orientation::upper && x.param == Rational(1)) return lower(Rational(1));
  return x;
}

inline bool same_denoted_set(const TaggedInterval& x, const TaggedInterval& y) {
  return lo_endpoint(x) == lo_endpoint(y) && hi_endpoint(x) == hi_endpoint(y);
}

inline bool denoted_subseteq(const TaggedInterval& x, const TaggedInterval& y) {
  return lo_endpoint(y) <= lo_endpoint(x) && hi_endpoint(x) <= hi_endpoint(y);
}

// Mixed case follows the numeric table: n^0 * m^1 = m^1 * n^0 = full
// interval if m <= n, else (1-(m-n))^1.
inline TaggedInterval star_mixed(const Rational& n, const Rational& m) {
  if (m <= n) return lower(Rational(1));
  return upper(Rational(1) - (m - n));
}

inline TaggedInterval star(const TaggedInterval& x, const TaggedInterval& y) {
  const bool xl = x.orient == Orientation::lower;
  const bool yl = y.orient == Orientation::lower;
  if (xl && yl) return oplus_i0(x, y);
  if (!xl && !yl) return lower(Rational(1));
  return xl ? star_canonical(star_mixed(x.param, y.param))
            : star_canonical(star_mixed(y.param, x.param));
}

inline TaggedInterval star_neg(const TaggedInterval& x) {
  return star_canonical(j_swap(x));
}

// ----- Strips of the unit square (rectangle model) -----

inline Strip strip_lower(const Rational& level) { return {Orientation::lower, level}; }
inline Strip strip_upper(const Rational& level) { return {Orientation::upper, level}; }

// Strip geometry: a lower strip reaches up to y = a, an upper strip reaches
// down to y = 1-b; both span the full unit width, so areas equal heights.
inline Rational strip_union_area(const Strip& a, const Strip& b) {
  assert(a.orient == Orientation::lower && b.orient == Orientation::upper);
  const Rational top_of_lower = a.level;
  const Rational bottom_of_upper = Rational(1) - b.level;
  if (top_of_lower >= bottom_of_upper) return Rational(1);  // strips overlap: union is Q
  return a.level + b.level;
}

inline Rational strip_intersection_area(const Strip& a, const Strip& b) {
  assert(a.orient == Orientation::lower && b.orient == Orientation::upper);
  const Rational overlap = a.level - (Rational(1) - b.level);
  return rat_max(Rational(0), overlap);
}

inline Strip oplus_r0(const Strip& a, const Strip& b) {
  assert(a.orient == Orientation::lower && b.orient == Orientation::lower);
  return strip_lower(strip_union_area(a, strip_upper(b.level)));
}

inline Strip odot_r0(const Strip& a, const Strip& b) {
  assert(a.orient == Orientation::lower && b.orient == Orientation::lower);
  return strip_lower(strip_intersection_area(a, strip_upper(b.level)));
}

inline Strip strip_neg(const Strip& a) {
  assert(a.orient == Orientation::lower);
  return strip_lower(Rational(1) - a.level);
}

}  // namespace mvlab
