#include "kcover/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>

#include "kcover/density.hpp"
#include "kcover/error.hpp"
#include "kcover/patterns.hpp"
#include "kcover/voronoi.hpp"

namespace kcover {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Counts evaluations against a budget and keeps the incumbent. Ties on
// density go to the lexicographically smaller parameter vector.
class Search {
 public:
  Search(std::function<double(std::span<const double>)> objective, std::int64_t budget)
      : objective_(std::move(objective)), budget_(budget) {}

  double operator()(std::span<const double> p) {
    if (exhausted()) return kInf;
    ++evaluations_;
    double f = objective_(p);
    if (!std::isfinite(f)) f = kInf;
    if (f < kInf) {
      std::vector<double> params(p.begin(), p.end());
      if (f < best_value_ || (f == best_value_ && params < best_params_)) {
        best_value_ = f;
        best_params_ = params;
        history_.push_back({evaluations_, std::move(params), f});
      }
    }
    return f;
  }

  bool exhausted() const { return evaluations_ >= budget_; }
  std::int64_t remaining() const { return budget_ - evaluations_; }
  std::int64_t evaluations() const { return evaluations_; }
  double best_value() const { return best_value_; }
  const std::vector<double>& best_params() const { return best_params_; }
  std::vector<HistoryEntry>& history() { return history_; }

 private:
  std::function<double(std::span<const double>)> objective_;
  std::int64_t budget_;
  std::int64_t evaluations_ = 0;
  double best_value_ = kInf;
  std::vector<double> best_params_;
  std::vector<HistoryEntry> history_;
};

struct Start {
  double value;
  std::vector<double> x;
};

// Multi-start refinement shared by both searches: Nelder-Mead from each start,
// then restarts around the incumbent with a shrinking step until a restart
// fails to improve it.
bool refine(Search& search, std::vector<Start> starts, std::vector<double> step, double xtol) {
  const Objective f = [&](std::span<const double> p) { return search(p); };
  bool converged = true;
  const auto per_start = [&](std::size_t left) {
    return std::max<std::int64_t>(1, search.remaining() / static_cast<std::int64_t>(left + 1));
  };
  for (std::size_t i = 0; i < starts.size() && !search.exhausted(); ++i) {
    const SimplexResult r = nelder_mead(f, starts[i].x, step, per_start(starts.size() - i), xtol);
    converged = converged && r.converged;
  }
  for (int restart = 0; restart < 8 && !search.exhausted(); ++restart) {
    const double before = search.best_value();
    for (double& s : step) s *= 0.5;
    const SimplexResult r = nelder_mead(f, search.best_params(), step, search.remaining(), xtol);
    converged = r.converged;
    if (!(search.best_value() < before)) break;
  }
  return converged && !search.exhausted();
}

std::vector<Start> pick_starts(std::vector<Start> evaluated, std::size_t count) {
  std::erase_if(evaluated, [](const Start& s) { return !(s.value < kInf); });
  std::stable_sort(evaluated.begin(), evaluated.end(), [](const Start& a, const Start& b) {
    return a.value < b.value || (a.value == b.value && a.x < b.x);
  });
  if (evaluated.size() > count) evaluated.resize(count);
  return evaluated;
}

PeriodicConfig single_lattice(double b, double c) {
  return PeriodicConfig(Basis({1.0, 0.0}, {b, c}), {{0.0, 0.0}}, 1.0);
}

// Normalized (b, c) of a lattice: reduced basis rotated so u lies on the
// positive x-axis, scaled to |u| = 1, mirrored so b >= 0.
std::vector<double> canonical_lattice_params(double b, double c) {
  const Basis r = reduce_basis(Basis({1.0, 0.0}, {b, c}));
  const double len = norm(r.u());
  const Vec2 v = (1.0 / len) * rotated(r.v(), -std::atan2(r.u().y, r.u().x));
  return {std::abs(v.x), std::abs(v.y)};
}

void check_budget(std::int64_t budget) {
  if (budget < 1000) throw DomainError("optimizer budget must be at least 1000 evaluations");
}

}  // namespace

double optimal_scaled_density(const PeriodicConfig& c, int k, double tol) {
  const double big_r = covering_radius(c, k, tol).high;
  return static_cast<double>(c.size()) * std::numbers::pi * big_r * big_r / c.basis().det();
}

SimplexResult nelder_mead(const Objective& f, std::vector<double> x0, std::span<const double> step,
                          std::int64_t max_evals, double xtol) {
  const std::size_t n = x0.size();
  if (n == 0 || step.size() != n) throw DomainError("nelder_mead: step must match x0");
  SimplexResult out;
  auto eval = [&](const std::vector<double>& x) {
    ++out.evaluations;
    const double v = f(x);
    return std::isfinite(v) ? v : kInf;
  };

  std::vector<std::vector<double>> pts(n + 1, x0);
  std::vector<double> val(n + 1);
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step[i];
  for (std::size_t i = 0; i <= n && out.evaluations < max_evals; ++i) val[i] = eval(pts[i]);
  if (out.evaluations < static_cast<std::int64_t>(n + 1)) {
    out.x = x0;
    out.value = val[0];
    return out;
  }

  std::vector<std::size_t> order(n + 1);
  auto point_at = [&](const std::vector<double>& from, const std::vector<double>& to, double t) {
    std::vector<double> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = from[i] + t * (to[i] - from[i]);
    return p;
  };

  while (out.evaluations < max_evals) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return val[a] < val[b]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];

    double diameter = 0.0;
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j < n; ++j) diameter = std::max(diameter, std::abs(pts[i][j] - pts[best][j]));
    if (diameter < xtol) {
      out.converged = true;
      break;
    }

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t j = 0; j < n; ++j) centroid[j] += pts[i][j] / static_cast<double>(n);
    }

    const auto reflected = point_at(centroid, pts[worst], -1.0);
    const double fr = eval(reflected);
    if (fr < val[best]) {
      if (out.evaluations >= max_evals) {
        pts[worst] = reflected, val[worst] = fr;
        break;
      }
      const auto expanded = point_at(centroid, pts[worst], -2.0);
      const double fe = eval(expanded);
      if (fe < fr) {
        pts[worst] = expanded, val[worst] = fe;
      } else {
        pts[worst] = reflected, val[worst] = fr;
      }
      continue;
    }
    if (fr < val[second]) {
      pts[worst] = reflected, val[worst] = fr;
      continue;
    }
    if (out.evaluations >= max_evals) break;
    // Outside contraction when the reflection beat the worst point, inside otherwise.
    const bool outside = fr < val[worst];
    const auto contracted = point_at(centroid, outside ? reflected : pts[worst], 0.5);
    const double fc = eval(contracted);
    if (fc < std::min(fr, val[worst])) {
      pts[worst] = contracted, val[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= n && out.evaluations < max_evals; ++i) {
      if (i == best) continue;
      pts[i] = point_at(pts[best], pts[i], 0.5);
      val[i] = eval(pts[i]);
    }
  }

  const auto it = std::min_element(val.begin(), val.end());
  out.x = pts[static_cast<std::size_t>(it - val.begin())];
  out.value = *it;
  return out;
}

ScalarMax golden_section_maximize(const std::function<double(double)>& f, double a, double b,
                                  double xtol) {
  if (!(a < b)) throw DomainError("golden_section_maximize: empty interval");
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - ratio * (b - a), d = a + ratio * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > xtol) {
    if (fc >= fd) {
      b = d;
      d = c, fd = fc;
      c = b - ratio * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d, fc = fd;
      d = a + ratio * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

double pattern_b_profile(double x) { return x * pattern_b_max_y(x); }

OptimizationResult optimize_single_lattice(int k, std::int64_t budget, double tol, std::uint64_t seed) {
  if (k < 1 || k > 6) throw DomainError("optimize_single_lattice: k must lie in 1..6");
  check_budget(budget);

  Search search(
      [&](std::span<const double> p) {
        const double b = p[0], c = p[1];
        if (!(c > 0.05) || !(c < 20.0) || !(std::abs(b) < 20.0)) return kInf;
        return optimal_scaled_density(single_lattice(b, c), k, tol);
      },
      budget);

  constexpr int kGrid = 20;
  constexpr double kMaxC = 3.0;
  std::vector<Start> grid;
  for (int i = 0; i < kGrid; ++i) {
    const double b = 0.5 * i / (kGrid - 1);
    const double cmin = std::sqrt(1.0 - b * b);
    for (int j = 0; j < kGrid; ++j) {
      const double c = cmin + (kMaxC - cmin) * j / (kGrid - 1);
      const std::vector<double> x{b, c};
      grid.push_back({search(x), x});
    }
  }
  std::vector<Start> starts = pick_starts(grid, 4);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ub(0.0, 0.5), uc(0.0, 1.0);
  for (int i = 0; i < 2; ++i) {
    const double b = ub(rng);
    const double cmin = std::sqrt(1.0 - b * b);
    const std::vector<double> x{b, cmin + (kMaxC - cmin) * uc(rng)};
    starts.push_back({search(x), x});
  }
  const bool converged = refine(search, starts, {0.05, 0.05}, 1e-6);

  const std::vector<double> params =
      canonical_lattice_params(search.best_params()[0], search.best_params()[1]);
  const PeriodicConfig geometry = single_lattice(params[0], params[1]);
  const PeriodicConfig best = geometry.with_radius(covering_radius(geometry, k, tol).high);
  OptimizationResult result{best, params, config_density(best), verify_k_coverage(best, k, tol),
                            search.evaluations(), std::move(search.history()), converged};
  return result;
}

OptimizationResult optimize_pattern_b(std::int64_t budget, double tol, std::uint64_t seed) {
  check_budget(budget);
  constexpr int k = 2;
  // Shape parameters: a = y / (2x), t = d / y, with x fixed at 1/2. Scale is
  // restored afterwards from the covering radius, in which units the
  // feasibility region is stated.
  struct Normalized {
    double x, y, d, big_r;
  };
  auto normalize = [&](double a, double t) -> std::optional<Normalized> {
    if (!(a > 0.05) || !(a < 20.0) || !(t > 0.0) || !(t < 2.0)) return std::nullopt;
    const PeriodicConfig c = two_line_config(0.5, a, t * a);
    if (!all_cells_congruent(c).congruent) return std::nullopt;
    const double big_r = covering_radius(c, k, tol).high;
    const Normalized n{0.5 / big_r, a / big_r, t * a / big_r, big_r};
    if (n.x > 1.0 || n.y > pattern_b_max_y(n.x) + 1e-9) return std::nullopt;
    return n;
  };

  Search search(
      [&](std::span<const double> p) {
        const auto n = normalize(p[0], p[1]);
        if (!n) return kInf;
        return std::numbers::pi / (n->x * n->y);
      },
      budget);

  constexpr int kGrid = 20;
  std::vector<Start> grid;
  for (int i = 0; i < kGrid; ++i) {
    const double a = 0.2 + 2.8 * i / (kGrid - 1);
    for (int j = 0; j < kGrid; ++j) {
      const double t = 2.0 * (j + 0.5) / kGrid;
      const std::vector<double> x{a, t};
      grid.push_back({search(x), x});
    }
  }
  std::vector<Start> starts = pick_starts(grid, 4);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ua(0.2, 3.0), ut(0.0, 2.0);
  for (int i = 0; i < 2; ++i) {
    const std::vector<double> x{ua(rng), ut(rng)};
    starts.push_back({search(x), x});
  }
  const bool converged = refine(search, starts, {0.05, 0.05}, 1e-6);
  if (search.best_params().empty()) throw DomainError("optimize_pattern_b: no feasible configuration found");

  const auto n = normalize(search.best_params()[0], search.best_params()[1]);
  const PeriodicConfig geometry = two_line_config(n->x, n->y, n->d);
  const PeriodicConfig best = geometry.with_radius(covering_radius(geometry, k, tol).high);

  // Report history in (x, y, d) radius units.
  for (HistoryEntry& h : search.history()) {
    const auto hn = normalize(h.params[0], h.params[1]);
    h.params = {hn->x, hn->y, hn->d};
  }
  OptimizationResult result{best, {n->x, n->y, n->d}, config_density(best),
                            verify_k_coverage(best, k, tol), search.evaluations(),
                            std::move(search.history()), converged};
  return result;
}

}  // namespace kcover
