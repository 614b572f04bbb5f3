#pragma once

#include "mvlab/algebra.hpp"
#include "mvlab/chang.hpp"
#include "mvlab/hole.hpp"
#include "mvlab/rational.hpp"

namespace mvlab {

// Designated zero candidate for the star algebra probe.
enum class StarZero { lower0, upper0 };

AlgebraHandle make_lukasiewicz();
AlgebraHandle make_interval_i0();
AlgebraHandle make_interval_i0_odot();
AlgebraHandle make_interval_i1();
AlgebraHandle make_rectangle();
AlgebraHandle make_chang(ChangVariant variant, std::uint32_t max_index);
AlgebraHandle make_truncated(const Rational& mass);
AlgebraHandle make_square_hole(const Rational& k);
AlgebraHandle make_disk_hole(double r, double tolerance = 1e-9);
AlgebraHandle make_powerset(int n);
AlgebraHandle make_star(StarZero zero = StarZero::lower0);

}  // namespace mvlab
