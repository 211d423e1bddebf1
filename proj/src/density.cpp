#include "kcover/density.hpp"

#include <cmath>

#include "kcover/error.hpp"

namespace kcover {

double config_density(const PeriodicConfig& c) {
  const double r = c.radius();
  return static_cast<double>(c.size()) * std::numbers::pi * r * r / c.basis().det();
}

double cell_density(const VoronoiCell& cell, double r) {
  if (!(r > 0.0)) throw DomainError("cell_density: radius must be positive");
  return std::numbers::pi * r * r / polygon_area(cell.polygon);
}

double toth_lower_bound(int k) {
  if (k < 1) throw DomainError("toth_lower_bound: k must be a positive integer");
  return (std::numbers::pi / 3.0) / std::sin(std::numbers::pi / (3.0 * k));
}

DensityReport density_report(const PeriodicConfig& c, int k) {
  DensityReport r;
  r.k = k;
  r.density = config_density(c);
  r.normalized = r.density / kTheta;
  r.toth_bound = toth_lower_bound(k);
  r.meets_toth = r.density >= r.toth_bound - 1e-9;
  return r;
}

const std::vector<KnownValue>& known_values() {
  // Multiples are the published decimals, not refined values.
  static const std::vector<KnownValue> table{
      {"theta", kTheta},
      {"2theta", 2.0 * kTheta},
      {"blundon_2", 2.0 * kTheta},
      {"blundon_3", 2.841 * kTheta},
      {"blundon_4", 3.608 * kTheta},
      {"danzer_low", 2.094},
      {"danzer_high", 2.347},
  };
  return table;
}

std::optional<double> known_value(std::string_view name) {
  // Accept the Greek spelling used in print.
  if (name == "θ") name = "theta";
  if (name == "2θ") name = "2theta";
  for (const auto& kv : known_values())
    if (kv.name == name) return kv.value;
  return std::nullopt;
}

std::optional<double> blundon_density(int k) {
  switch (k) {
    case 1: return kTheta;
    case 2: return known_value("blundon_2");
    case 3: return known_value("blundon_3");
    case 4: return known_value("blundon_4");
    default: return std::nullopt;
  }
}

}  // namespace kcover
