#include "mvlab/surface.hpp"

#include <sstream>

#include <json.hpp>

#include "mvlab/elements.hpp"
#include "mvlab/interval.hpp"

namespace mvlab {

double SurfaceGrid::value_at(std::size_t i, std::size_t j) const {
  const std::size_t idx = i * side() + j;
  if (const auto* exact = std::get_if<std::vector<Rational>>(&values))
    return to_double((*exact)[idx]);
  return std::get<std::vector<double>>(values)[idx];
}

SurfaceGrid build_lukasiewicz_surface(int n) {
  SurfaceGrid grid;
  grid.model = "lukasiewicz";
  grid.n = n;
  std::vector<Rational> values;
  values.reserve(grid.side() * grid.side());
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      values.push_back(lukasiewicz_oplus(Rational(i, n), Rational(j, n)));
  grid.values = std::move(values);
  return grid;
}

SurfaceGrid build_hole_surface(const HoleProfile& profile, int n) {
  SurfaceGrid grid;
  grid.n = n;
  if (profile.exact()) {
    grid.model = profile.kind == HoleProfile::Kind::square ? "square-hole" : "lukasiewicz";
    if (profile.kind == HoleProfile::Kind::square) grid.params = {{"k", to_string(profile.k)}};
    std::vector<Rational> values;
    values.reserve(grid.side() * grid.side());
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        values.push_back(induced_oplus_exact(profile, Rational(i, n), Rational(j, n)));
    grid.values = std::move(values);
  } else {
    grid.model = "disk-hole";
    grid.params = {{"r", render_real(profile.r)}};
    std::vector<double> values;
    values.reserve(grid.side() * grid.side());
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        values.push_back(
            induced_oplus(profile, static_cast<double>(i) / n, static_cast<double>(j) / n));
    grid.values = std::move(values);
  }
  return grid;
}

std::string surface_to_csv(const SurfaceGrid& grid) {
  std::ostringstream out;
  out << "a,b,value\n";
  const int n = grid.n;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      out << render_real(static_cast<double>(i) / n) << ','
          << render_real(static_cast<double>(j) / n) << ','
          << render_real(grid.value_at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)))
          << '\n';
    }
  }
  return out.str();
}

std::string surface_to_json(const SurfaceGrid& grid) {
  nlohmann::ordered_json doc;
  doc["model"] = grid.model;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : grid.params) params[key] = value;
  doc["params"] = params;
  doc["grid"] = grid.n;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < grid.side(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < grid.side(); ++j) {
      if (const auto* exact = std::get_if<std::vector<Rational>>(&grid.values))
        row.push_back(to_string((*exact)[i * grid.side() + j]));
      else
        row.push_back(std::get<std::vector<double>>(grid.values)[i * grid.side() + j]);
    }
    rows.push_back(row);
  }
  doc["values"] = rows;
  return doc.dump(2) + "\n";
}

}  // namespace mvlab
