#pragma once

#include <string>
#include <variant>
#include <vector>

#include "mvlab/hole.hpp"
#include "mvlab/rational.hpp"

namespace mvlab {

// A binary [0,1]^2 operation sampled on an (n+1)x(n+1) grid, row-major:
// values[i*(n+1)+j] = op(i/n, j/n). Exact models carry rationals, the disk
// model doubles.
struct SurfaceGrid {
  std::string model;
  std::vector<std::pair<std::string, std::string>> params;
  int n = 0;
  std::variant<std::vector<Rational>, std::vector<double>> values;

  std::size_t side() const { return static_cast<std::size_t>(n) + 1; }
  double value_at(std::size_t i, std::size_t j) const;
};

SurfaceGrid build_lukasiewicz_surface(int n);
SurfaceGrid build_hole_surface(const HoleProfile& profile, int n);

// CSV: header "a,b,value", decimal columns with 12 significant digits,
// row-major rows.
std::string surface_to_csv(const SurfaceGrid& grid);

// JSON keeps exact models exact: values render as fraction strings; the
// disk model emits numbers.
std::string surface_to_json(const SurfaceGrid& grid);

}  // namespace mvlab
