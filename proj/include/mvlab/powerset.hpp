#pragma once

#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvlab/algebra.hpp"
#include "mvlab/elements.hpp"

namespace mvlab {

struct UniverseMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct SizeLimit : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline SubsetElem subset(std::uint32_t bits, int n) {
  return {bits, static_cast<std::uint8_t>(n)};
}

inline std::uint32_t universe_mask(int n) { return (1u << n) - 1u; }

inline void require_same_universe(const SubsetElem& a, const SubsetElem& b) {
  if (a.n != b.n) throw UniverseMismatch("subsets drawn from different universes");
}

// j(A_i) = (S\B)_{((i-1) mod m)+1} for i = 1..|A|: with 1-based positions
// in the complement's inherited order, the image collapses to the first
// min(|A|, m) elements of S\B.
inline SubsetElem j_map(const SubsetElem& a, const SubsetElem& b) {
  require_same_universe(a, b);
  if ((a.bits & ~b.bits) != 0) throw PreconditionError("j_map requires A to be a subset of B");
  std::uint32_t comp = ~b.bits & universe_mask(b.n);
  const int m = std::popcount(comp);
  if (m == 0) return subset(0, a.n);
  int take = std::popcount(a.bits);
  if (take > m) take = m;
  std::uint32_t out = 0;
  for (int i = 0; i < take; ++i) {
    const std::uint32_t low = comp & (~comp + 1u);
    out |= low;
    comp ^= low;
  }
  return subset(out, a.n);
}

// A (+) B = A u B u j(A n B, A u B); |A (+) B| = min(|A|+|B|, n).
inline SubsetElem powerset_oplus(const SubsetElem& a, const SubsetElem& b) {
  require_same_universe(a, b);
  const SubsetElem meet = subset(a.bits & b.bits, a.n);
  const SubsetElem join = subset(a.bits | b.bits, a.n);
  return subset(join.bits | j_map(meet, join).bits, a.n);
}

inline SubsetElem powerset_neg(const SubsetElem& a) {
  return subset(~a.bits & universe_mask(a.n), a.n);
}

inline bool subset_leq(const SubsetElem& a, const SubsetElem& b) {
  return (a.bits & ~b.bits) == 0;
}

// Universe with named symbols; subsets inherit the list order. The default
// universe is the first n lowercase letters.
struct OrderedUniverse {
  std::vector<std::string> symbols;

  static OrderedUniverse letters(int n);
  int size() const { return static_cast<int>(symbols.size()); }
  std::string render(const SubsetElem& a) const;
};

// Recomputes A (+) B from the literal set formula with list indexing and no
// bit tricks; test oracle for powerset_oplus.
std::vector<std::string> literal_oplus(const OrderedUniverse& u,
                                       const std::vector<std::string>& a,
                                       const std::vector<std::string>& b);

struct ChainPairCheck {
  bool holds = true;
  std::uint64_t pairs = 0;
  std::vector<std::pair<SubsetElem, SubsetElem>> failures;
};

// For every comparable pair A <= B verifies the Lukasiewicz identity
// neg(neg A (+) B) (+) B == neg(neg B (+) A) (+) A. SizeLimit if n > 6.
ChainPairCheck chain_pair_check(int n);

// Full exhaustive axiom suite over P(S) for the default n-letter universe.
// The domain is tiny, so counterexamples are reported uncapped.
CheckReport analyze_powerset(int n);
CheckReport analyze_powerset(int n, const CheckOptions& options);

}  // namespace mvlab
