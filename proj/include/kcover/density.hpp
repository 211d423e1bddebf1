#pragma once

#include <numbers>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "kcover/lattice.hpp"
#include "kcover/voronoi.hpp"

namespace kcover {

// Area of the regular hexagon inscribed in the unit circle.
inline const double kHexagonArea = 3.0 * std::numbers::sqrt3 / 2.0;
// Kershner's constant: the thinnest one-fold covering density, pi / A_6.
inline const double kTheta = std::numbers::pi / kHexagonArea;

struct DensityReport {
  double density = 0.0;
  double normalized = 0.0;  // density / theta
  double toth_bound = 0.0;
  bool meets_toth = false;  // density >= toth_bound - 1e-9
  int k = 1;
};

// n * pi * r^2 / det(basis).
double config_density(const PeriodicConfig& c);

// pi * r^2 / area(cell).
double cell_density(const VoronoiCell& cell, double r);

// Toth's lower bound on k-fold covering density: (pi / 3) / sin(pi / (3k)).
double toth_lower_bound(int k);

DensityReport density_report(const PeriodicConfig& c, int k);

struct KnownValue {
  std::string_view name;
  double value;
};

// Literature constants: theta, 2theta, Blundon's lattice values for k = 2..4,
// and Danzer's interval for double lattice two-fold coverings.
const std::vector<KnownValue>& known_values();
std::optional<double> known_value(std::string_view name);

// Blundon's minimum k-fold lattice covering density for k in 1..4.
std::optional<double> blundon_density(int k);

}  // namespace kcover
