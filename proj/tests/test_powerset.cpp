#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "mvlab/powerset.hpp"

using namespace mvlab;

namespace {

SubsetElem from_symbols(std::initializer_list<char> symbols, int n) {
  std::uint32_t bits = 0;
  for (char c : symbols) bits |= 1u << (c - 'a');
  return subset(bits, n);
}

std::vector<std::string> to_symbol_list(const SubsetElem& a) {
  std::vector<std::string> out;
  for (int i = 0; i < a.n; ++i)
    if (a.bits >> i & 1u) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

}  // namespace

TEST_CASE("j_map fills from the complement in universe order") {
  // The fill that completes {a,c,d,e} to S when one slot remains.
  CHECK(j_map(from_symbols({'d'}, 5), from_symbols({'a', 'c', 'd', 'e'}, 5)) ==
        from_symbols({'b'}, 5));
  CHECK(j_map(subset(0, 5), from_symbols({'b', 'c'}, 5)) == subset(0, 5));
  CHECK(j_map(from_symbols({'a', 'b'}, 4), from_symbols({'a', 'b'}, 4)) ==
        from_symbols({'c', 'd'}, 4));
  // More elements than the complement: indices wrap, the set collapses.
  CHECK(j_map(from_symbols({'a', 'b', 'c'}, 4), from_symbols({'a', 'b', 'c'}, 4)) ==
        from_symbols({'d'}, 4));
  // B = S leaves nothing to add.
  CHECK(j_map(from_symbols({'a'}, 3), from_symbols({'a', 'b', 'c'}, 3)) == subset(0, 3));
}

TEST_CASE("j_map preconditions") {
  CHECK_THROWS_AS(j_map(from_symbols({'a'}, 3), from_symbols({'b'}, 3)), PreconditionError);
  CHECK_THROWS_AS(j_map(subset(1, 3), subset(1, 4)), UniverseMismatch);
}

TEST_CASE("powerset oplus reproduces the worked example") {
  CHECK(powerset_oplus(from_symbols({'a', 'd', 'e'}, 5), from_symbols({'c', 'd'}, 5)) ==
        from_symbols({'a', 'b', 'c', 'd', 'e'}, 5));
  CHECK(powerset_oplus(subset(0, 5), from_symbols({'b', 'e'}, 5)) == from_symbols({'b', 'e'}, 5));
  CHECK(powerset_oplus(from_symbols({'a', 'b'}, 4), from_symbols({'a', 'b'}, 4)) ==
        from_symbols({'a', 'b', 'c', 'd'}, 4));
}

TEST_CASE("complement negation") {
  CHECK(powerset_neg(from_symbols({'b', 'c'}, 5)) == from_symbols({'a', 'd', 'e'}, 5));
  CHECK(powerset_neg(subset(0, 4)) == subset(universe_mask(4), 4));
  for (std::uint32_t bits = 0; bits <= universe_mask(5); ++bits)
    CHECK(powerset_neg(powerset_neg(subset(bits, 5))) == subset(bits, 5));
}

TEST_CASE("cardinality law |A(+)B| = min(|A|+|B|, n) for n up to 6") {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint32_t a = 0; a <= universe_mask(n); ++a) {
      for (std::uint32_t b = 0; b <= universe_mask(n); ++b) {
        const int expected =
            std::min(std::popcount(a) + std::popcount(b), n);
        CHECK(std::popcount(powerset_oplus(subset(a, n), subset(b, n)).bits) == expected);
      }
    }
  }
}

TEST_CASE("bitset implementation agrees with the literal formula for n up to 5") {
  for (int n = 1; n <= 5; ++n) {
    const OrderedUniverse u = OrderedUniverse::letters(n);
    for (std::uint32_t a = 0; a <= universe_mask(n); ++a) {
      for (std::uint32_t b = 0; b <= universe_mask(n); ++b) {
        const auto expected = literal_oplus(u, to_symbol_list(subset(a, n)),
                                            to_symbol_list(subset(b, n)));
        CHECK(to_symbol_list(powerset_oplus(subset(a, n), subset(b, n))) == expected);
      }
    }
  }
}

TEST_CASE("analysis shape at n = 5 matches the worked counterexample") {
  const CheckReport report = analyze_powerset(5);
  for (const auto& v : report.verdicts) {
    switch (v.axiom) {
      case AxiomId::zero_identity:
      case AxiomId::one_absorbing:
      case AxiomId::neg_zero_absorbing:
      case AxiomId::neg_involution:
      case AxiomId::oplus_commutative:
        CHECK(v.holds);
        break;
      case AxiomId::lukasiewicz4: {
        CHECK_FALSE(v.holds);
        bool found = false;
        for (const auto& ce : v.counterexamples) {
          if (ce.inputs.size() == 2 &&
              std::get<SubsetElem>(ce.inputs[0]) == from_symbols({'b', 'c'}, 5) &&
              std::get<SubsetElem>(ce.inputs[1]) == from_symbols({'c', 'd'}, 5)) {
            CHECK(std::get<SubsetElem>(ce.lhs) == from_symbols({'c', 'd'}, 5));
            CHECK(std::get<SubsetElem>(ce.rhs) == from_symbols({'b', 'c'}, 5));
            found = true;
          }
        }
        CHECK(found);
        break;
      }
      default:
        break;  // associativity and monotonicity are reported as found
    }
  }
}

TEST_CASE("two-element universe is Boolean: everything holds") {
  CHECK(analyze_powerset(1).all_hold());
}

TEST_CASE("stored lukasiewicz4 counterexamples replay from their inputs") {
  const CheckReport report = analyze_powerset(4);
  for (const auto& v : report.verdicts) {
    if (v.axiom != AxiomId::lukasiewicz4) continue;
    REQUIRE_FALSE(v.counterexamples.empty());
    for (const auto& ce : v.counterexamples) {
      REQUIRE(ce.inputs.size() == 2);
      const SubsetElem x = std::get<SubsetElem>(ce.inputs[0]);
      const SubsetElem y = std::get<SubsetElem>(ce.inputs[1]);
      const SubsetElem lhs = powerset_oplus(powerset_neg(powerset_oplus(powerset_neg(x), y)), y);
      const SubsetElem rhs = powerset_oplus(powerset_neg(powerset_oplus(powerset_neg(y), x)), x);
      CHECK(lhs == std::get<SubsetElem>(ce.lhs));
      CHECK(rhs == std::get<SubsetElem>(ce.rhs));
      CHECK_FALSE(lhs == rhs);
    }
  }
}

TEST_CASE("lukasiewicz4 fails for every n >= 3") {
  for (int n = 3; n <= 6; ++n) {
    const CheckReport report = analyze_powerset(n);
    for (const auto& v : report.verdicts)
      if (v.axiom == AxiomId::lukasiewicz4) CHECK_FALSE(v.holds);
  }
}

TEST_CASE("commutativity holds exhaustively at n = 4") {
  const CheckReport report = analyze_powerset(4);
  for (const auto& v : report.verdicts) {
    if (v.axiom == AxiomId::oplus_commutative) {
      CHECK(v.holds);
      CHECK(v.cases == 256);
    }
  }
}

TEST_CASE("chain pairs satisfy the lukasiewicz identity") {
  for (int n = 1; n <= 6; ++n) {
    const ChainPairCheck check = chain_pair_check(n);
    CHECK(check.holds);
    std::uint64_t expected = 1;
    for (int i = 0; i < n; ++i) expected *= 3;  // pairs A <= B biject with {in A, in B\A, out}
    CHECK(check.pairs == expected);
  }
  CHECK(chain_pair_check(5).pairs == 243);
}

TEST_CASE("chain identity evaluates to B on both sides for A inside B") {
  const SubsetElem a = from_symbols({'c'}, 5);
  const SubsetElem b = from_symbols({'c', 'd'}, 5);
  const SubsetElem lhs = powerset_oplus(powerset_neg(powerset_oplus(powerset_neg(a), b)), b);
  const SubsetElem rhs = powerset_oplus(powerset_neg(powerset_oplus(powerset_neg(b), a)), a);
  CHECK(lhs == b);
  CHECK(rhs == b);
}

TEST_CASE("size limits") {
  CHECK_THROWS_AS(analyze_powerset(7), SizeLimit);
  CHECK_THROWS_AS(analyze_powerset(0), SizeLimit);
  CHECK_THROWS_AS(chain_pair_check(7), SizeLimit);
}

TEST_CASE("rendering uses sorted symbol lists") {
  CHECK(render_subset(from_symbols({'c', 'b'}, 5)) == "{b,c}");
  CHECK(render_subset(subset(0, 5)) == "{}");
  CHECK(render_subset(subset(universe_mask(3), 3)) == "{a,b,c}");
  const OrderedUniverse u = OrderedUniverse::letters(5);
  CHECK(u.render(from_symbols({'a', 'e'}, 5)) == "{a,e}");
}
