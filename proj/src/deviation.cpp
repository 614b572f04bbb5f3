#include "mvlab/deviation.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "mvlab/elements.hpp"
#include "mvlab/interval.hpp"

namespace mvlab {

DeviationRow deviation_for(const HoleProfile& profile, const std::string& size_label, int grid_q) {
  DeviationRow row;
  row.size_label = size_label;
  if (profile.exact()) {
    Rational best(0);
    for (int i = 0; i <= grid_q; ++i) {
      for (int j = 0; j <= grid_q; ++j) {
        const Rational a(i, grid_q);
        const Rational b(j, grid_q);
        const Rational diff =
            rat_abs(induced_oplus_exact(profile, a, b) - lukasiewicz_oplus(a, b));
        best = rat_max(best, diff);
      }
    }
    row.size = profile.kind == HoleProfile::Kind::square ? to_double(profile.k) : 0.0;
    row.exact = best;
    row.value = to_double(best);
  } else {
    double best = 0;
    for (int i = 0; i <= grid_q; ++i) {
      for (int j = 0; j <= grid_q; ++j) {
        const double a = static_cast<double>(i) / grid_q;
        const double b = static_cast<double>(j) / grid_q;
        const double reference = a + b < 1.0 ? a + b : 1.0;
        best = std::max(best, std::fabs(induced_oplus(profile, a, b) - reference));
      }
    }
    row.size = profile.r;
    row.value = best;
  }
  return row;
}

std::string deviation_table_text(const std::vector<DeviationRow>& rows) {
  std::ostringstream out;
  out << "size        sup-deviation\n";
  for (const auto& r : rows) {
    std::string size = r.size_label;
    size.resize(12, ' ');
    out << size << render_real(r.value) << "\n";
  }
  return out.str();
}

std::string deviation_table_csv(const std::vector<DeviationRow>& rows) {
  std::ostringstream out;
  out << "size,deviation\n";
  for (const auto& r : rows) out << r.size_label << ',' << render_real(r.value) << '\n';
  return out.str();
}

std::string deviation_table_json(const std::vector<DeviationRow>& rows, const std::string& hole) {
  nlohmann::ordered_json doc;
  doc["hole"] = hole;
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json e;
    e["size"] = r.size_label;
    e["deviation"] = r.value;
    if (r.exact) e["deviation_exact"] = to_string(*r.exact);
    entries.push_back(e);
  }
  doc["rows"] = entries;
  return doc.dump(2) + "\n";
}

}  // namespace mvlab
