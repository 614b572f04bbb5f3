#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mvlab/elements.hpp"
#include "mvlab/splitmix.hpp"

namespace mvlab {

struct IncompatibleStrategy : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class AxiomId {
  neg_involution,      // neg(neg x) = x
  one_absorbing,       // 1 (+) x = 1
  neg_zero_absorbing,  // x (+) neg 0 = neg 0
  lukasiewicz4,        // neg(neg x (+) y) (+) y = neg(neg y (+) x) (+) x
  oplus_commutative,
  oplus_associative,
  zero_identity,       // 0 (+) x = x
  tnorm_monotone,      // a <= b implies a (+) c <= b (+) c
};

inline constexpr std::array<AxiomId, 8> kAllAxioms = {
    AxiomId::neg_involution,    AxiomId::one_absorbing,     AxiomId::neg_zero_absorbing,
    AxiomId::lukasiewicz4,      AxiomId::oplus_commutative, AxiomId::oplus_associative,
    AxiomId::zero_identity,     AxiomId::tnorm_monotone,
};

std::string_view axiom_name(AxiomId id);
std::optional<AxiomId> axiom_from_name(std::string_view name);

// Tuples generated per case: unary laws draw one element, commutativity
// two, and the associativity-class laws (including Lukasiewicz4 and
// monotonicity) three.
int axiom_tuple_arity(AxiomId id);

// The Lukasiewicz axiom's right-hand side as printed reads
// neg(neg y (+) neg x) (+) x; the standard MV form is neg(neg y (+) x) (+) x.
enum class Axiom4Form { standard, as_printed };

struct SamplingStrategy {
  enum class Kind { exhaustive, grid, random };
  Kind kind = Kind::exhaustive;
  int q = 0;                              // grid: points i/q per axis
  std::uint64_t seed = 0;                 // random
  std::uint64_t count = 0;                // random: number of tuples
  std::uint64_t denominator_bound = 0;    // random

  static SamplingStrategy exhaustive() { return {}; }
  static SamplingStrategy grid(int q) {
    SamplingStrategy s;
    s.kind = Kind::grid;
    s.q = q;
    return s;
  }
  static SamplingStrategy random(std::uint64_t seed, std::uint64_t count,
                                 std::uint64_t denominator_bound) {
    SamplingStrategy s;
    s.kind = Kind::random;
    s.seed = seed;
    s.count = count;
    s.denominator_bound = denominator_bound;
    return s;
  }
};

struct Equality {
  enum class Kind { exact, tolerance };
  Kind kind = Kind::exact;
  double eps = 0;

  static Equality exact() { return {}; }
  static Equality tolerance(double eps) { return {Kind::tolerance, eps}; }
};

// A concrete MV-style structure bundled with everything the checker needs:
// domain sources, the two operations, designated elements, the order used
// by the monotonicity law, equality mode, and rendering.
struct AlgebraHandle {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;

  // Finite carriers provide enumerate_finite; parameterized carriers
  // provide grid_elements and random_element. The engine rejects
  // incompatible strategy/domain combinations.
  std::function<std::vector<Element>()> enumerate_finite;
  std::function<std::vector<Element>(int q)> grid_elements;
  std::function<Element(SplitMix64&, std::uint64_t denominator_bound)> random_element;

  std::function<Element(const Element&, const Element&)> oplus;
  std::function<Element(const Element&)> neg;
  std::function<bool(const Element&, const Element&)> leq;
  Element zero;
  Element one;
  Equality equality;
  std::function<std::string(const Element&)> render;

  bool equal(const Element& a, const Element& b) const;
};

struct Counterexample {
  std::vector<Element> inputs;
  Element lhs;
  Element rhs;
};

struct AxiomVerdict {
  AxiomId axiom{};
  bool holds = true;
  std::uint64_t cases = 0;
  std::uint64_t violations = 0;  // failing tuples; the list below is deduplicated
  std::vector<Counterexample> counterexamples;
};

struct CheckReport {
  std::string algebra;
  std::vector<std::pair<std::string, std::string>> params;
  SamplingStrategy strategy;
  Axiom4Form axiom4_form = Axiom4Form::standard;
  std::vector<AxiomVerdict> verdicts;

  bool all_hold() const;
};

struct CheckOptions {
  Axiom4Form axiom4_form = Axiom4Form::standard;
  std::size_t max_counterexamples = 16;

  static constexpr std::size_t unbounded = std::numeric_limits<std::size_t>::max();
};

AxiomVerdict check_axiom(const AlgebraHandle& alg, AxiomId axiom, const SamplingStrategy& strategy,
                         const CheckOptions& options = {});

CheckReport run_suite(const AlgebraHandle& alg, const SamplingStrategy& strategy,
                      const std::vector<AxiomId>& axioms = {kAllAxioms.begin(), kAllAxioms.end()},
                      const CheckOptions& options = {});

// De Morgan dual neg(neg x (+) neg y); cross-checks the direct (.) of the
// interval models.
Element derived_odot(const AlgebraHandle& alg, const Element& x, const Element& y);

}  // namespace mvlab
