#include "mvlab/models.hpp"

#include <utility>

#include "mvlab/interval.hpp"
#include "mvlab/powerset.hpp"

namespace mvlab {

namespace {

Rational random_unit_rational(SplitMix64& stream, std::uint64_t denominator_bound) {
  const std::int64_t den =
      1 + static_cast<std::int64_t>(stream.next() % denominator_bound);
  const std::int64_t num = static_cast<std::int64_t>(stream.next() % (static_cast<std::uint64_t>(den) + 1));
  return Rational(num, den);
}

std::vector<Element> unit_grid(int q) {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(q) + 1);
  for (int i = 0; i <= q; ++i) out.emplace_back(Rational(i, q));
  return out;
}

template <class Lift>
void parameterized_domain(AlgebraHandle& h, Lift lift) {
  h.grid_elements = [lift](int q) {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(q) + 1);
    for (int i = 0; i <= q; ++i) out.push_back(lift(Rational(i, q)));
    return out;
  };
  h.random_element = [lift](SplitMix64& stream, std::uint64_t den_bound) {
    return lift(random_unit_rational(stream, den_bound));
  };
}

bool rational_leq(const Element& a, const Element& b) {
  return std::get<Rational>(a) <= std::get<Rational>(b);
}

}  // namespace

AlgebraHandle make_lukasiewicz() {
  AlgebraHandle h;
  h.name = "lukasiewicz";
  h.grid_elements = unit_grid;
  h.random_element = [](SplitMix64& s, std::uint64_t d) { return Element(random_unit_rational(s, d)); };
  h.oplus = [](const Element& x, const Element& y) {
    return Element(lukasiewicz_oplus(std::get<Rational>(x), std::get<Rational>(y)));
  };
  h.neg = [](const Element& x) { return Element(lukasiewicz_neg(std::get<Rational>(x))); };
  h.leq = rational_leq;
  h.zero = Rational(0);
  h.one = Rational(1);
  h.render = render_element;
  return h;
}

AlgebraHandle make_interval_i0() {
  AlgebraHandle h;
  h.name = "interval-i0";
  parameterized_domain(h, [](const Rational& a) { return Element(lower(a)); });
  h.oplus = [](const Element& x, const Element& y) {
    return Element(oplus_i0(std::get<TaggedInterval>(x), std::get<TaggedInterval>(y)));
  };
  h.neg = [](const Element& x) { return Element(involution_i(std::get<TaggedInterval>(x))); };
  h.leq = [](const Element& a, const Element& b) {
    return std::get<TaggedInterval>(a).param <= std::get<TaggedInterval>(b).param;
  };
  h.zero = lower(Rational(0));
  h.one = lower(Rational(1));
  h.render = render_element;
  return h;
}

AlgebraHandle make_interval_i0_odot() {
  AlgebraHandle h = make_interval_i0();
  h.name = "interval-i0-odot";
  h.oplus = [](const Element& x, const Element& y) {
    return Element(odot_i0(std::get<TaggedInterval>(x), std::get<TaggedInterval>(y)));
  };
  // Dual designations: the (.) unit is 1^0 and the absorbing element 0^0.
  h.zero = lower(Rational(1));
  h.one = lower(Rational(0));
  return h;
}

AlgebraHandle make_interval_i1() {
  AlgebraHandle h;
  h.name = "interval-i1";
  parameterized_domain(h, [](const Rational& a) { return Element(upper(a)); });
  h.oplus = [](const Element& x, const Element& y) {
    return Element(oplus_i1(std::get<TaggedInterval>(x), std::get<TaggedInterval>(y)));
  };
  h.neg = [](const Element& x) { return Element(neg_i1(std::get<TaggedInterval>(x))); };
  h.leq = [](const Element& a, const Element& b) {
    return std::get<TaggedInterval>(a).param <= std::get<TaggedInterval>(b).param;
  };
  h.zero = upper(Rational(0));
  h.one = upper(Rational(1));
  h.render = render_element;
  return h;
}

AlgebraHandle make_rectangle() {
  AlgebraHandle h;
  h.name = "rectangle";
  parameterized_domain(h, [](const Rational& a) { return Element(strip_lower(a)); });
  h.oplus = [](const Element& x, const Element& y) {
    return Element(oplus_r0(std::get<Strip>(x), std::get<Strip>(y)));
  };
  h.neg = [](const Element& x) { return Element(strip_neg(std::get<Strip>(x))); };
  h.leq = [](const Element& a, const Element& b) {
    return std::get<Strip>(a).level <= std::get<Strip>(b).level;
  };
  h.zero = strip_lower(Rational(0));
  h.one = strip_lower(Rational(1));
  h.render = render_element;
  return h;
}

AlgebraHandle make_chang(ChangVariant variant, std::uint32_t max_index) {
  AlgebraHandle h;
  h.name = "chang";
  h.params = {{"variant", variant == ChangVariant::standard ? "standard" : "as-printed"},
              {"max_index", std::to_string(max_index)}};
  h.enumerate_finite = [max_index]() {
    std::vector<Element> out;
    for (const ChangElem& e : chang_enumerate(max_index)) out.emplace_back(e);
    return out;
  };
  h.oplus = [variant](const Element& x, const Element& y) {
    return Element(chang_oplus(variant, std::get<ChangElem>(x), std::get<ChangElem>(y)));
  };
  h.neg = [](const Element& x) { return Element(chang_neg(std::get<ChangElem>(x))); };
  h.leq = [](const Element& a, const Element& b) {
    return chang_leq(std::get<ChangElem>(a), std::get<ChangElem>(b));
  };
  h.zero = chang_zero();
  h.one = chang_one();
  h.render = render_element;
  return h;
}

AlgebraHandle make_truncated(const Rational& mass) {
  AlgebraHandle h;
  h.name = "truncated";
  h.params = {{"m", to_string(mass)}};
  parameterized_domain(h, [mass](const Rational& x) { return Element(x * mass); });
  h.oplus = [mass](const Element& x, const Element& y) {
    return Element(truncated_oplus(mass, std::get<Rational>(x), std::get<Rational>(y)));
  };
  h.neg = [mass](const Element& x) { return Element(truncated_neg(mass, std::get<Rational>(x))); };
  h.leq = rational_leq;
  h.zero = Rational(0);
  h.one = mass;
  h.render = render_element;
  return h;
}

AlgebraHandle make_square_hole(const Rational& k) {
  const HoleProfile profile = HoleProfile::square(k);
  AlgebraHandle h;
  h.name = "square-hole";
  h.params = {{"k", to_string(k)}};
  h.grid_elements = unit_grid;
  h.random_element = [](SplitMix64& s, std::uint64_t d) { return Element(random_unit_rational(s, d)); };
  h.oplus = [profile](const Element& x, const Element& y) {
    return Element(induced_oplus_exact(profile, std::get<Rational>(x), std::get<Rational>(y)));
  };
  h.neg = [profile](const Element& x) {
    return Element(induced_neg_exact(profile, std::get<Rational>(x)));
  };
  h.leq = rational_leq;
  h.zero = Rational(0);
  h.one = Rational(1);
  h.render = render_element;
  return h;
}

AlgebraHandle make_disk_hole(double r, double tolerance) {
  const HoleProfile profile = HoleProfile::disk(r);
  AlgebraHandle h;
  h.name = "disk-hole";
  h.params = {{"r", render_real(r)}, {"tolerance", render_real(tolerance)}};
  h.grid_elements = [](int q) {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(q) + 1);
    for (int i = 0; i <= q; ++i) out.emplace_back(static_cast<double>(i) / q);
    return out;
  };
  h.random_element = [](SplitMix64& s, std::uint64_t d) {
    return Element(to_double(random_unit_rational(s, d)));
  };
  h.oplus = [profile](const Element& x, const Element& y) {
    return Element(induced_oplus(profile, std::get<double>(x), std::get<double>(y)));
  };
  h.neg = [profile](const Element& x) { return Element(induced_neg(profile, std::get<double>(x))); };
  h.leq = [tolerance](const Element& a, const Element& b) {
    return std::get<double>(a) <= std::get<double>(b) + tolerance;
  };
  h.zero = 0.0;
  h.one = 1.0;
  h.equality = Equality::tolerance(tolerance);
  h.render = render_element;
  return h;
}

AlgebraHandle make_powerset(int n) {
  if (n < 1 || n > 6) throw SizeLimit("powerset universe size must be between 1 and 6");
  AlgebraHandle h;
  h.name = "powerset";
  h.params = {{"n", std::to_string(n)}};
  h.enumerate_finite = [n]() {
    std::vector<Element> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint32_t bits = 0; bits <= universe_mask(n); ++bits)
      out.emplace_back(subset(bits, n));
    return out;
  };
  h.oplus = [](const Element& x, const Element& y) {
    return Element(powerset_oplus(std::get<SubsetElem>(x), std::get<SubsetElem>(y)));
  };
  h.neg = [](const Element& x) { return Element(powerset_neg(std::get<SubsetElem>(x))); };
  h.leq = [](const Element& a, const Element& b) {
    return subset_leq(std::get<SubsetElem>(a), std::get<SubsetElem>(b));
  };
  h.zero = subset(0, n);
  h.one = subset(universe_mask(n), n);
  h.render = render_element;
  return h;
}

AlgebraHandle make_star(StarZero zero) {
  AlgebraHandle h;
  h.name = "star";
  h.params = {{"zero", zero == StarZero::lower0 ? "0^0" : "0^1"}};
  // Both families on the grid; Upper 1 denotes the same set as Lower 1 and
  // is kept once, in canonical form.
  h.grid_elements = [](int q) {
    std::vector<Element> out;
    out.reserve(2 * static_cast<std::size_t>(q) + 1);
    for (int i = 0; i <= q; ++i) out.emplace_back(lower(Rational(i, q)));
    for (int i = 0; i < q; ++i) out.emplace_back(upper(Rational(i, q)));
    return out;
  };
  h.random_element = [](SplitMix64& s, std::uint64_t d) {
    const bool is_lower = (s.next() & 1u) == 0;
    const Rational a = random_unit_rational(s, d);
    return Element(star_canonical(is_lower ? lower(a) : upper(a)));
  };
  h.oplus = [](const Element& x, const Element& y) {
    return Element(star(std::get<TaggedInterval>(x), std::get<TaggedInterval>(y)));
  };
  h.neg = [](const Element& x) { return Element(star_neg(std::get<TaggedInterval>(x))); };
  h.leq = [](const Element& a, const Element& b) {
    return denoted_subseteq(std::get<TaggedInterval>(a), std::get<TaggedInterval>(b));
  };
  h.zero = zero == StarZero::lower0 ? lower(Rational(0)) : upper(Rational(0));
  h.one = lower(Rational(1));
  h.render = render_element;
  return h;
}

}  // namespace mvlab
