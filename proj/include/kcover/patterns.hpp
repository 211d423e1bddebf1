#pragma once

#include <optional>
#include <string_view>

#include "kcover/lattice.hpp"

namespace kcover {

// Honeycomb configuration with unit edges and unit disks:
// u = (sqrt3, 0), v = (sqrt3/2, 3/2), offsets {(0,0), (0,1)}. Every Voronoi
// cell is an equilateral triangle inscribed in its disk; the disks form an
// exact (boundary-tight) two-fold covering of density 2 * theta.
PeriodicConfig triangle_pattern();

// Upper end of the feasible y range for a two-line pattern with half-spacing
// x: sqrt(1 - x^2) + 1.
double pattern_b_max_y(double x);

// Two families of evenly spaced collinear centers, unit radius. Base lattice
// u = (2x, 0), v = (x, y) plus its translate by (0, d); det = 2xy, one disk
// per area xy.
//
// Throws DomainError unless 0 < x <= 1, 0 < y <= sqrt(1 - x^2) + 1 and
// 0 < d < 2y.
PeriodicConfig pattern_b(double x, double y, double d);

// Same construction without the feasibility checks on x and y; only the
// geometric preconditions x, y > 0 and 0 < d < 2y are enforced.
PeriodicConfig two_line_config(double x, double y, double d);

// pi / (x (sqrt(1 - x^2) + 1)), the density floor of a two-line pattern with
// half-spacing x. Throws DomainError("domain") outside (0, 1].
double pattern_b_density_bound(double x);

enum class TangentVariant { a, b };

// Square-spaced unit-radius configurations with density pi: variant a has
// unit spacing in both directions; variant b keeps unit horizontal spacing
// and uses `vertical_spacing` (in (0, 1]) vertically.
PeriodicConfig tangent_pattern_c(TangentVariant variant, double vertical_spacing = 1.0);

struct PatternSpec {
  std::string_view name;  // triangle, pattern_b, pattern_c_a, pattern_c_b
  double x = 0.0;
  double y = 0.0;
  double d = 0.0;
};

// Dispatches on PatternSpec::name. Throws DomainError for unknown names.
PeriodicConfig build_pattern(const PatternSpec& spec);

}  // namespace kcover
