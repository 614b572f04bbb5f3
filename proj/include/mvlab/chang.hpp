#pragma once

#include <vector>

#include "mvlab/elements.hpp"

namespace mvlab {

enum class ChangVariant { as_printed, standard };

inline ChangElem chang_atom(std::uint32_t n) { return {ChangElem::Tier::atom, n}; }
inline ChangElem chang_coatom(std::uint32_t n) { return {ChangElem::Tier::coatom, n}; }
inline ChangElem chang_zero() { return chang_atom(0); }
inline ChangElem chang_one() { return chang_coatom(0); }

inline ChangElem chang_neg(const ChangElem& x) {
  return {x.tier == ChangElem::Tier::atom ? ChangElem::Tier::coatom : ChangElem::Tier::atom,
          x.index};
}

// Rules (a) and (b) are shared; the mixed rules differ between the printed
// table (1 when m <= n, else (m-n) co-atom) and the standard correction
// (1 when m >= n, else (n-m) co-atom). Commutative in both variants.
inline ChangElem chang_oplus(ChangVariant variant, const ChangElem& x, const ChangElem& y) {
  const bool xa = x.tier == ChangElem::Tier::atom;
  const bool ya = y.tier == ChangElem::Tier::atom;
  if (xa && ya) return chang_atom(x.index + y.index);
  if (!xa && !ya) return chang_one();
  const std::uint32_t m = xa ? x.index : y.index;  // atom index
  const std::uint32_t n = xa ? y.index : x.index;  // co-atom index
  if (variant == ChangVariant::as_printed) {
    return m <= n ? chang_one() : chang_coatom(m - n);
  }
  return m >= n ? chang_one() : chang_coatom(n - m);
}

// Atoms sit below every co-atom; co-atoms 1-na order by decreasing index.
inline bool chang_leq(const ChangElem& x, const ChangElem& y) {
  const bool xa = x.tier == ChangElem::Tier::atom;
  const bool ya = y.tier == ChangElem::Tier::atom;
  if (xa && ya) return x.index <= y.index;
  if (!xa && !ya) return x.index >= y.index;
  return xa;
}

// Atom 0..N then CoAtom 0..N; size 2*(max_index+1).
inline std::vector<ChangElem> chang_enumerate(std::uint32_t max_index) {
  std::vector<ChangElem> out;
  out.reserve(2 * (max_index + 1));
  for (std::uint32_t i = 0; i <= max_index; ++i) out.push_back(chang_atom(i));
  for (std::uint32_t i = 0; i <= max_index; ++i) out.push_back(chang_coatom(i));
  return out;
}

}  // namespace mvlab
