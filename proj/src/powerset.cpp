#include "mvlab/powerset.hpp"

#include <algorithm>

#include "mvlab/models.hpp"

namespace mvlab {

OrderedUniverse OrderedUniverse::letters(int n) {
  OrderedUniverse u;
  u.symbols.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) u.symbols.push_back(std::string(1, static_cast<char>('a' + i)));
  return u;
}

std::string OrderedUniverse::render(const SubsetElem& a) const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < a.n; ++i) {
    if (a.bits >> i & 1u) {
      if (!first) out += ',';
      out += symbols[static_cast<std::size_t>(i)];
      first = false;
    }
  }
  return out + "}";
}

// Literal reading of A (+) B = A u B u j(A n B, A u B) on symbol lists,
// with j applied elementwise via 1-based modular indexing into S\B.
std::vector<std::string> literal_oplus(const OrderedUniverse& u,
                                       const std::vector<std::string>& a,
                                       const std::vector<std::string>& b) {
  auto position = [&](const std::string& sym) {
    return std::find(u.symbols.begin(), u.symbols.end(), sym) - u.symbols.begin();
  };
  auto sorted_set = [&](std::vector<std::string> v) {
    std::sort(v.begin(), v.end(),
              [&](const std::string& x, const std::string& y) { return position(x) < position(y); });
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };

  std::vector<std::string> meet;
  for (const auto& s : a)
    if (std::find(b.begin(), b.end(), s) != b.end()) meet.push_back(s);
  meet = sorted_set(meet);

  std::vector<std::string> join = a;
  join.insert(join.end(), b.begin(), b.end());
  join = sorted_set(join);

  std::vector<std::string> complement;
  for (const auto& s : u.symbols)
    if (std::find(join.begin(), join.end(), s) == join.end()) complement.push_back(s);

  std::vector<std::string> result = join;
  const std::size_t m = complement.size();
  if (m > 0) {
    for (std::size_t i = 1; i <= meet.size(); ++i)
      result.push_back(complement[(i - 1) % m]);  // (S\B)_{((i-1) mod m)+1}, 1-based
  }
  return sorted_set(result);
}

namespace {

void require_desk_scale(int n) {
  if (n < 1 || n > 6) throw SizeLimit("powerset universe size must be between 1 and 6");
}

}  // namespace

ChainPairCheck chain_pair_check(int n) {
  require_desk_scale(n);
  ChainPairCheck out;
  const std::uint32_t full = universe_mask(n);
  for (std::uint32_t b = 0; b <= full; ++b) {
    // Subsets of b enumerate exactly the comparable pairs a <= b.
    std::uint32_t a = b;
    while (true) {
      const SubsetElem sa = subset(a, n);
      const SubsetElem sb = subset(b, n);
      ++out.pairs;
      const SubsetElem lhs =
          powerset_oplus(powerset_neg(powerset_oplus(powerset_neg(sa), sb)), sb);
      const SubsetElem rhs =
          powerset_oplus(powerset_neg(powerset_oplus(powerset_neg(sb), sa)), sa);
      if (!(lhs == rhs)) {
        out.holds = false;
        out.failures.emplace_back(sa, sb);
      }
      if (a == 0) break;
      a = (a - 1) & b;
    }
  }
  return out;
}

CheckReport analyze_powerset(int n, const CheckOptions& options) {
  require_desk_scale(n);
  return run_suite(make_powerset(n), SamplingStrategy::exhaustive(),
                   {kAllAxioms.begin(), kAllAxioms.end()}, options);
}

CheckReport analyze_powerset(int n) {
  CheckOptions options;
  options.max_counterexamples = CheckOptions::unbounded;
  return analyze_powerset(n, options);
}

}  // namespace mvlab
