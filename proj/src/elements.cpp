#include "mvlab/elements.hpp"

#include <charconv>
#include <cstdio>

#include "mvlab/rational.hpp"

namespace mvlab {

std::string render_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string render_interval(const TaggedInterval& x) {
  return to_string(x.param) + (x.orient == Orientation::lower ? "^0" : "^1");
}

std::string render_strip(const Strip& x) {
  return (x.orient == Orientation::lower ? "R0(" : "R1(") + to_string(x.level) + ")";
}

std::string render_chang(const ChangElem& x) {
  if (x.index == 0) return x.tier == ChangElem::Tier::atom ? "0" : "1";
  return std::to_string(x.index) + (x.tier == ChangElem::Tier::atom ? "a" : "~a");
}

std::string render_subset(const SubsetElem& x) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < x.n; ++i) {
    if (x.bits >> i & 1u) {
      if (!first) out += ',';
      out += static_cast<char>('a' + i);
      first = false;
    }
  }
  out += '}';
  return out;
}

std::string render_element(const Element& e) {
  switch (e.index()) {
    case 0: return to_string(std::get<Rational>(e));
    case 1: return render_interval(std::get<TaggedInterval>(e));
    case 2: return render_strip(std::get<Strip>(e));
    case 3: return render_chang(std::get<ChangElem>(e));
    case 4: return render_subset(std::get<SubsetElem>(e));
    default: return render_real(std::get<double>(e));
  }
}

std::optional<Rational> parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s) -> std::optional<std::int64_t> {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
    return v;
  };
  if (text.empty()) return std::nullopt;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_int(text.substr(0, slash));
    auto den = parse_int(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return Rational(*num, *den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 15) return std::nullopt;
    auto wv = whole.empty() || whole == "-" ? std::optional<std::int64_t>(0) : parse_int(whole);
    auto fv = parse_int(frac);
    if (!wv || !fv || *fv < 0) return std::nullopt;
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const bool negative = !whole.empty() && whole[0] == '-';
    const std::int64_t mag = (*wv < 0 ? -*wv : *wv) * scale + *fv;
    return Rational(negative ? -mag : mag, scale);
  }
  auto v = parse_int(text);
  if (!v) return std::nullopt;
  return Rational(*v);
}

}  // namespace mvlab
