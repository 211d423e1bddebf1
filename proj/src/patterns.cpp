#include "kcover/patterns.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "kcover/error.hpp"

namespace kcover {

namespace {
// Slack on the y bound so the honeycomb (which sits exactly on it) is feasible.
constexpr double kBoundSlack = 1e-12;
}  // namespace

PeriodicConfig triangle_pattern() {
  const double s3 = std::numbers::sqrt3;
  return PeriodicConfig(Basis({s3, 0.0}, {s3 / 2.0, 1.5}), {{0.0, 0.0}, {0.0, 1.0}}, 1.0);
}

double pattern_b_max_y(double x) { return std::sqrt(std::max(0.0, 1.0 - x * x)) + 1.0; }

PeriodicConfig two_line_config(double x, double y, double d) {
  if (!(x > 0.0) || !(y > 0.0) || !std::isfinite(x) || !std::isfinite(y))
    throw DomainError("infeasible pattern parameters (x and y must be positive)");
  if (!(d > 0.0) || !(d < 2.0 * y))
    throw DomainError("infeasible pattern parameters (d must lie in (0, 2y))");
  return PeriodicConfig(Basis({2.0 * x, 0.0}, {x, y}), {{0.0, 0.0}, {0.0, d}}, 1.0);
}

PeriodicConfig pattern_b(double x, double y, double d) {
  if (!(x > 0.0) || !(x <= 1.0))
    throw DomainError("infeasible pattern parameters (x must lie in (0, 1])");
  if (!(y > 0.0) || y > pattern_b_max_y(x) + kBoundSlack)
    throw DomainError("infeasible pattern parameters (y exceeds √(1−x²)+1)");
  return two_line_config(x, y, d);
}

double pattern_b_density_bound(double x) {
  if (!(x > 0.0) || !(x <= 1.0)) throw DomainError("domain");
  return std::numbers::pi / (x * pattern_b_max_y(x));
}

PeriodicConfig tangent_pattern_c(TangentVariant variant, double vertical_spacing) {
  const double dy = variant == TangentVariant::a ? 1.0 : vertical_spacing;
  if (!(dy > 0.0) || dy > 1.0)
    throw DomainError("infeasible pattern parameters (vertical spacing must lie in (0, 1])");
  return PeriodicConfig(Basis({1.0, 0.0}, {0.0, dy}), {{0.0, 0.0}}, 1.0);
}

PeriodicConfig build_pattern(const PatternSpec& spec) {
  if (spec.name == "triangle") return triangle_pattern();
  if (spec.name == "pattern_b") return pattern_b(spec.x, spec.y, spec.d);
  if (spec.name == "pattern_c_a") return tangent_pattern_c(TangentVariant::a);
  if (spec.name == "pattern_c_b") return tangent_pattern_c(TangentVariant::b);
  throw DomainError("unknown pattern: " + std::string(spec.name));
}

}  // namespace kcover
