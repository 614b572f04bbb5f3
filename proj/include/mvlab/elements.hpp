#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <variant>

#include "mvlab/rational.hpp"

namespace mvlab {

enum class Orientation : std::uint8_t { lower, upper };

// Lower a denotes [0,a]; Upper a denotes [1-a,1]. Both have measure a.
struct TaggedInterval {
  Orientation orient = Orientation::lower;
  Rational param;

  friend bool operator==(const TaggedInterval&, const TaggedInterval&) = default;
};

// Lower level denotes the strip {(x,y) : y <= level} of the unit square,
// Upper level the strip {(x,y) : y >= 1-level}. Area equals level.
struct Strip {
  Orientation orient = Orientation::lower;
  Rational level;

  friend bool operator==(const Strip&, const Strip&) = default;
};

// Atom n denotes the formal symbol na (Atom 0 = 0); CoAtom n denotes 1-na
// (CoAtom 0 = 1).
struct ChangElem {
  enum class Tier : std::uint8_t { atom, coatom };
  Tier tier = Tier::atom;
  std::uint32_t index = 0;

  friend bool operator==(const ChangElem&, const ChangElem&) = default;
};

// Subset of an n-symbol ordered universe, bit i = symbol i.
struct SubsetElem {
  std::uint32_t bits = 0;
  std::uint8_t n = 0;

  friend bool operator==(const SubsetElem&, const SubsetElem&) = default;
};

using Element = std::variant<Rational, TaggedInterval, Strip, ChangElem, SubsetElem, double>;

// Deterministic total order used to sort counterexamples.
inline bool element_less(const Element& a, const Element& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  switch (a.index()) {
    case 0:
      return std::get<Rational>(a) < std::get<Rational>(b);
    case 1: {
      const auto& x = std::get<TaggedInterval>(a);
      const auto& y = std::get<TaggedInterval>(b);
      return std::tie(x.orient, x.param) < std::tie(y.orient, y.param);
    }
    case 2: {
      const auto& x = std::get<Strip>(a);
      const auto& y = std::get<Strip>(b);
      return std::tie(x.orient, x.level) < std::tie(y.orient, y.level);
    }
    case 3: {
      const auto& x = std::get<ChangElem>(a);
      const auto& y = std::get<ChangElem>(b);
      return std::tie(x.tier, x.index) < std::tie(y.tier, y.index);
    }
    case 4: {
      const auto& x = std::get<SubsetElem>(a);
      const auto& y = std::get<SubsetElem>(b);
      return std::tie(x.n, x.bits) < std::tie(y.n, y.bits);
    }
    default:
      return std::get<double>(a) < std::get<double>(b);
  }
}

std::string render_real(double x);  // 12 significant digits

// "3/10^0", "R0(3/10)", "3a" / "3~a", "{b,c}"
std::string render_interval(const TaggedInterval& x);
std::string render_strip(const Strip& x);
std::string render_chang(const ChangElem& x);
std::string render_subset(const SubsetElem& x);

// Model-independent fallback covering every alternative.
std::string render_element(const Element& e);

}  // namespace mvlab
