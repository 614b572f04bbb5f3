#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvlab/hole.hpp"

namespace mvlab {

// Sup deviation of the induced operation from min(1,a+b) over the grid
// pairs (i/q, j/q). Exact for square/null profiles.
struct DeviationRow {
  std::string size_label;
  double size = 0;
  std::optional<Rational> exact;  // set for square/null profiles
  double value = 0;
};

DeviationRow deviation_for(const HoleProfile& profile, const std::string& size_label, int grid_q);

std::string deviation_table_text(const std::vector<DeviationRow>& rows);
std::string deviation_table_csv(const std::vector<DeviationRow>& rows);
std::string deviation_table_json(const std::vector<DeviationRow>& rows, const std::string& hole);

}  // namespace mvlab
