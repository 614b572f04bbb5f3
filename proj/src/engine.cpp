#include "mvlab/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace mvlab {

namespace {

struct AxiomInfo {
  AxiomId id;
  std::string_view name;
  int arity;
};

constexpr std::array<AxiomInfo, 8> kAxiomInfo = {{
    {AxiomId::neg_involution, "NegInvolution", 1},
    {AxiomId::one_absorbing, "OneAbsorbing", 1},
    {AxiomId::neg_zero_absorbing, "NegZeroAbsorbing", 1},
    {AxiomId::lukasiewicz4, "Lukasiewicz4", 3},
    {AxiomId::oplus_commutative, "OplusCommutative", 2},
    {AxiomId::oplus_associative, "OplusAssociative", 3},
    {AxiomId::zero_identity, "ZeroIdentity", 1},
    {AxiomId::tnorm_monotone, "TNormMonotone", 3},
}};

const AxiomInfo& info(AxiomId id) {
  for (const auto& i : kAxiomInfo)
    if (i.id == id) return i;
  std::abort();
}

// Lukasiewicz4 is enumerated over triples to match the reported case
// counts, but the identity itself reads only the first two coordinates.
int used_arity(AxiomId id) { return id == AxiomId::lukasiewicz4 ? 2 : info(id).arity; }

bool tolerance_equal(const Element& a, const Element& b, double eps) {
  if (a.index() != b.index()) return false;
  if (std::holds_alternative<double>(a))
    return std::fabs(std::get<double>(a) - std::get<double>(b)) <= eps;
  if (std::holds_alternative<Rational>(a))
    return std::fabs(to_double(std::get<Rational>(a)) - to_double(std::get<Rational>(b))) <= eps;
  return a == b;
}

// Evaluates one axiom instance; returns a violation record when the
// identity fails on the given tuple.
std::optional<Counterexample> evaluate(const AlgebraHandle& alg, AxiomId axiom,
                                       const std::vector<Element>& tuple, Axiom4Form form) {
  const auto& x = tuple[0];
  switch (axiom) {
    case AxiomId::neg_involution: {
      Element lhs = alg.neg(alg.neg(x));
      if (alg.equal(lhs, x)) return std::nullopt;
      return Counterexample{{x}, lhs, x};
    }
    case AxiomId::one_absorbing: {
      Element lhs = alg.oplus(alg.one, x);
      if (alg.equal(lhs, alg.one)) return std::nullopt;
      return Counterexample{{alg.one, x}, lhs, alg.one};
    }
    case AxiomId::neg_zero_absorbing: {
      Element nz = alg.neg(alg.zero);
      Element lhs = alg.oplus(x, nz);
      if (alg.equal(lhs, nz)) return std::nullopt;
      return Counterexample{{x, nz}, lhs, nz};
    }
    case AxiomId::zero_identity: {
      Element lhs = alg.oplus(alg.zero, x);
      if (alg.equal(lhs, x)) return std::nullopt;
      return Counterexample{{alg.zero, x}, lhs, x};
    }
    case AxiomId::lukasiewicz4: {
      const auto& y = tuple[1];
      Element lhs = alg.oplus(alg.neg(alg.oplus(alg.neg(x), y)), y);
      Element rhs = form == Axiom4Form::standard
                        ? alg.oplus(alg.neg(alg.oplus(alg.neg(y), x)), x)
                        : alg.oplus(alg.neg(alg.oplus(alg.neg(y), alg.neg(x))), x);
      if (alg.equal(lhs, rhs)) return std::nullopt;
      return Counterexample{{x, y}, lhs, rhs};
    }
    case AxiomId::oplus_commutative: {
      const auto& y = tuple[1];
      Element lhs = alg.oplus(x, y);
      Element rhs = alg.oplus(y, x);
      if (alg.equal(lhs, rhs)) return std::nullopt;
      return Counterexample{{x, y}, lhs, rhs};
    }
    case AxiomId::oplus_associative: {
      const auto& y = tuple[1];
      const auto& z = tuple[2];
      Element lhs = alg.oplus(alg.oplus(x, y), z);
      Element rhs = alg.oplus(x, alg.oplus(y, z));
      if (alg.equal(lhs, rhs)) return std::nullopt;
      return Counterexample{{x, y, z}, lhs, rhs};
    }
    case AxiomId::tnorm_monotone: {
      const auto& y = tuple[1];
      const auto& z = tuple[2];
      if (!alg.leq(x, y)) return std::nullopt;  // premise false: vacuous
      Element lhs = alg.oplus(x, z);
      Element rhs = alg.oplus(y, z);
      if (alg.leq(lhs, rhs)) return std::nullopt;
      return Counterexample{{x, y, z}, lhs, rhs};
    }
  }
  std::abort();
}

bool counterexample_less(const Counterexample& a, const Counterexample& b) {
  if (a.inputs.size() != b.inputs.size()) return a.inputs.size() < b.inputs.size();
  for (std::size_t k = 0; k < a.inputs.size(); ++k) {
    if (element_less(a.inputs[k], b.inputs[k])) return true;
    if (element_less(b.inputs[k], a.inputs[k])) return false;
  }
  if (element_less(a.lhs, b.lhs)) return true;
  if (element_less(b.lhs, a.lhs)) return false;
  return element_less(a.rhs, b.rhs);
}

bool counterexample_eq(const Counterexample& a, const Counterexample& b) {
  return !counterexample_less(a, b) && !counterexample_less(b, a);
}

std::vector<Element> domain_for(const AlgebraHandle& alg, const SamplingStrategy& strategy) {
  switch (strategy.kind) {
    case SamplingStrategy::Kind::exhaustive:
      if (!alg.enumerate_finite)
        throw IncompatibleStrategy("exhaustive strategy requires a finite carrier: " + alg.name);
      return alg.enumerate_finite();
    case SamplingStrategy::Kind::grid:
      if (!alg.grid_elements)
        throw IncompatibleStrategy("grid strategy requires a parameterized carrier: " + alg.name);
      if (strategy.q < 1) throw IncompatibleStrategy("grid resolution must be positive");
      return alg.grid_elements(strategy.q);
    case SamplingStrategy::Kind::random:
      throw IncompatibleStrategy("random strategy has no materialized domain");
  }
  std::abort();
}

}  // namespace

std::string_view axiom_name(AxiomId id) { return info(id).name; }

std::optional<AxiomId> axiom_from_name(std::string_view name) {
  for (const auto& i : kAxiomInfo)
    if (i.name == name) return i.id;
  return std::nullopt;
}

int axiom_tuple_arity(AxiomId id) { return info(id).arity; }

bool AlgebraHandle::equal(const Element& a, const Element& b) const {
  if (equality.kind == Equality::Kind::tolerance) return tolerance_equal(a, b, equality.eps);
  return a == b;
}

bool CheckReport::all_hold() const {
  for (const auto& v : verdicts)
    if (!v.holds) return false;
  return true;
}

AxiomVerdict check_axiom(const AlgebraHandle& alg, AxiomId axiom, const SamplingStrategy& strategy,
                         const CheckOptions& options) {
  AxiomVerdict verdict;
  verdict.axiom = axiom;
  const int arity = axiom_tuple_arity(axiom);
  const int used = used_arity(axiom);

  std::vector<Counterexample> found;
  if (strategy.kind == SamplingStrategy::Kind::random) {
    if (!alg.random_element)
      throw IncompatibleStrategy("random strategy requires a parameterized carrier: " + alg.name);
    if (strategy.count < 1) throw IncompatibleStrategy("random strategy needs a positive count");
    const std::uint64_t den_bound = strategy.denominator_bound ? strategy.denominator_bound : 1;
    SplitMix64 stream(strategy.seed);
    std::vector<Element> tuple(static_cast<std::size_t>(arity));
    for (std::uint64_t t = 0; t < strategy.count; ++t) {
      for (int k = 0; k < arity; ++k) tuple[static_cast<std::size_t>(k)] = alg.random_element(stream, den_bound);
      ++verdict.cases;
      if (auto ce = evaluate(alg, axiom, tuple, options.axiom4_form)) {
        ++verdict.violations;
        found.push_back(std::move(*ce));
      }
    }
  } else {
    const std::vector<Element> domain = domain_for(alg, strategy);
    const std::uint64_t n = domain.size();
    std::uint64_t cases = 1;
    for (int k = 0; k < arity; ++k) cases *= n;
    verdict.cases = cases;

    // When the identity ignores trailing tuple coordinates, evaluate each
    // distinct prefix once; every failing prefix accounts for one failing
    // tuple per ignored coordinate assignment.
    std::uint64_t weight = 1;
    for (int k = used; k < arity; ++k) weight *= n;

    std::vector<std::size_t> idx(static_cast<std::size_t>(used), 0);
    std::vector<Element> tuple(static_cast<std::size_t>(used));
    bool done = n == 0;
    while (!done) {
      for (int k = 0; k < used; ++k) tuple[static_cast<std::size_t>(k)] = domain[idx[static_cast<std::size_t>(k)]];
      if (auto ce = evaluate(alg, axiom, tuple, options.axiom4_form)) {
        verdict.violations += weight;
        found.push_back(std::move(*ce));
      }
      int k = used - 1;
      for (; k >= 0; --k) {
        if (++idx[static_cast<std::size_t>(k)] < n) break;
        idx[static_cast<std::size_t>(k)] = 0;
      }
      done = k < 0;
    }
  }

  std::sort(found.begin(), found.end(), counterexample_less);
  found.erase(std::unique(found.begin(), found.end(), counterexample_eq), found.end());
  if (found.size() > options.max_counterexamples) found.resize(options.max_counterexamples);
  verdict.counterexamples = std::move(found);
  verdict.holds = verdict.violations == 0;
  return verdict;
}

CheckReport run_suite(const AlgebraHandle& alg, const SamplingStrategy& strategy,
                      const std::vector<AxiomId>& axioms, const CheckOptions& options) {
  CheckReport report;
  report.algebra = alg.name;
  report.params = alg.params;
  report.strategy = strategy;
  report.axiom4_form = options.axiom4_form;
  report.verdicts.reserve(axioms.size());
  for (AxiomId id : kAllAxioms) {
    if (std::find(axioms.begin(), axioms.end(), id) == axioms.end()) continue;
    report.verdicts.push_back(check_axiom(alg, id, strategy, options));
  }
  return report;
}

Element derived_odot(const AlgebraHandle& alg, const Element& x, const Element& y) {
  return alg.neg(alg.oplus(alg.neg(x), alg.neg(y)));
}

}  // namespace mvlab
