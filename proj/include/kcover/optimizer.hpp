#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "kcover/coverage.hpp"
#include "kcover/lattice.hpp"

namespace kcover {

struct HistoryEntry {
  std::int64_t evaluation = 0;  // 1-based index of the evaluation that produced it
  std::vector<double> params;
  double density = 0.0;
};

struct OptimizationResult {
  PeriodicConfig best_config;
  // Single lattice: (b, c) of the normalized basis (1, 0), (b, c).
  // Pattern b: (x, y, d) in units of the disk radius.
  std::vector<double> params;
  double density = 0.0;
  CoverageCertificate certificate;
  std::int64_t evaluations = 0;
  // Successive improvements of the incumbent; densities are non-increasing.
  std::vector<HistoryEntry> history;
  // False when the evaluation budget ran out before the simplex collapsed.
  bool converged = false;
};

// Density of the thinnest k-fold covering with this center geometry: the disk
// radius is replaced by the certified upper bound on the order-k covering
// radius, n * pi * R^2 / det.
double optimal_scaled_density(const PeriodicConfig& c, int k, double tol);

// Minimum density k-fold lattice covering (one offset). Searches bases
// (1, 0), (b, c) with a 20x20 grid over 0 <= b <= 1/2, sqrt(1 - b^2) <= c <= 3,
// then Nelder-Mead refinement from the best grid points and seeded random
// starts, with restarts. Requires 1 <= k <= 6 and budget >= 1000.
OptimizationResult optimize_single_lattice(int k, std::int64_t budget, double tol,
                                           std::uint64_t seed = 0);

// Minimum density two-fold covering within the two-line family, restricted to
// configurations with congruent Voronoi cells and to parameters that are
// feasible in units of the scaled disk radius (x <= 1,
// y <= sqrt(1 - x^2) + 1). Requires budget >= 1000.
OptimizationResult optimize_pattern_b(std::int64_t budget, double tol, std::uint64_t seed = 0);

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  std::int64_t evaluations = 0;
  bool converged = false;  // simplex diameter fell below xtol
};

using Objective = std::function<double(std::span<const double>)>;

// Nelder-Mead downhill simplex (reflection 1, expansion 2, contraction 1/2,
// shrink 1/2). The initial simplex is x0 plus x0 + step[i] e_i. Non-finite
// objective values are treated as +infinity.
SimplexResult nelder_mead(const Objective& f, std::vector<double> x0, std::span<const double> step,
                          std::int64_t max_evals, double xtol = 1e-6);

struct ScalarMax {
  double argmax = 0.0;
  double value = 0.0;
};

// Golden-section search for the maximum of a unimodal function on [a, b].
ScalarMax golden_section_maximize(const std::function<double(double)>& f, double a, double b,
                                  double xtol = 1e-10);

// x (sqrt(1 - x^2) + 1): the area-per-disk profile of a two-line pattern at the
// largest feasible row spacing.
double pattern_b_profile(double x);

}  // namespace kcover
