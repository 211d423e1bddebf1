#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "kcover/error.hpp"
#include "kcover/coverage.hpp"
#include "kcover/density.hpp"
#include "kcover/patterns.hpp"
#include "kcover/voronoi.hpp"

using namespace kcover;

namespace {
const double kSqrt3 = std::sqrt(3.0);
}

TEST(TrianglePattern, Construction) {
  const PeriodicConfig c = triangle_pattern();
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(c.radius(), 1.0);
  EXPECT_NEAR(c.basis().det(), 1.5 * kSqrt3, 1e-12);
  // Each center has exactly three nearest neighbors at unit distance.
  for (const Point& o : c.offsets()) {
    const auto near = enumerate_centers(c, Rect::around(o), 1.0 + 1e-9);
    EXPECT_EQ(near.size(), 4u);  // itself plus three
    EXPECT_TRUE(enumerate_centers(c, Rect::around(o), 1.0 - 1e-9).size() == 1u);
  }
}

TEST(TrianglePattern, DensityCoverageCongruence) {
  const PeriodicConfig c = triangle_pattern();
  EXPECT_NEAR(config_density(c), 2.418399, 1e-6);
  EXPECT_EQ(verify_k_coverage(c, 2, 1e-6).status, CoverageStatus::tight);
  EXPECT_TRUE(all_cells_congruent(c).congruent);
  for (const auto& cell : voronoi_cells(c)) {
    EXPECT_EQ(cell.polygon.size(), 3u);
    for (const Point& v : cell.polygon.vertices()) EXPECT_NEAR(distance(v, cell.site), 1.0, 1e-12);
  }
}

TEST(PatternB, HoneycombParametersReproduceTheTrianglePattern) {
  const PeriodicConfig b = pattern_b(kSqrt3 / 2, 1.5, 1.0);
  const PeriodicConfig t = triangle_pattern();
  // Center sets agree modulo the lattice.
  ASSERT_EQ(b.size(), t.size());
  for (const Point& p : b.offsets()) {
    double best = 1e9;
    for (const Point& q : t.offsets()) best = std::min(best, periodic_distance(t.basis(), p, q));
    EXPECT_LT(best, 1e-9);
  }
  EXPECT_NEAR(b.basis().det(), t.basis().det(), 1e-12);
  EXPECT_NEAR(config_density(b), 2.418399, 1e-6);
}

TEST(PatternB, InfeasibleParameters) {
  try {
    pattern_b(0.9, 2.0, 1.0);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "infeasible pattern parameters (y exceeds √(1−x²)+1)");
  }
  EXPECT_THROW(pattern_b(1.2, 0.5, 0.2), DomainError);
  EXPECT_THROW(pattern_b(0.5, 1.0, 2.0), DomainError);
  EXPECT_THROW(pattern_b(0.5, 1.0, 0.0), DomainError);
}

TEST(PatternB, DensityIsPiOverXY) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double x = 0.05 + 0.95 * unit(rng);
    const double y = 0.05 + (pattern_b_max_y(x) - 0.05) * unit(rng);
    const double d = 2 * y * (0.01 + 0.98 * unit(rng));
    EXPECT_NEAR(config_density(pattern_b(x, y, d)), std::numbers::pi / (x * y),
                1e-9 * std::numbers::pi / (x * y));
  }
}

TEST(PatternBBound, Examples) {
  EXPECT_NEAR(pattern_b_density_bound(kSqrt3 / 2), 2.418399, 1e-6);
  EXPECT_NEAR(pattern_b_density_bound(kSqrt3 / 2), 2 * kTheta, 1e-12);
  EXPECT_NEAR(pattern_b_density_bound(1.0), std::numbers::pi, 1e-15);
  // pi / (0.5 * (sqrt(0.75) + 1)) = pi / 0.9330127...
  EXPECT_NEAR(pattern_b_density_bound(0.5), 3.367149, 1e-6);
  EXPECT_THROW(pattern_b_density_bound(0.0), DomainError);
  EXPECT_THROW(pattern_b_density_bound(1.0001), DomainError);
}

TEST(PatternBBound, MinimumIsTwoThetaAtRootThreeOverTwo) {
  double best = 1e9, arg = 0;
  for (int i = 1; i < 10000; ++i) {
    const double x = i * 1e-4;
    const double v = pattern_b_density_bound(x);
    EXPECT_GE(v, 2 * kTheta - 1e-9);
    if (v < best) best = v, arg = x;
  }
  EXPECT_NEAR(best, 2 * kTheta, 1e-6);
  EXPECT_NEAR(arg, kSqrt3 / 2, 1e-4);
}

TEST(PatternBBound, ProfileDerivativeChangesSignAtTheMaximum) {
  auto g = [](double x) { return x * pattern_b_max_y(x); };
  const double x0 = kSqrt3 / 2, h = 1e-6;
  EXPECT_NEAR(g(x0), 3 * kSqrt3 / 4, 1e-15);
  EXPECT_GT(g(x0 - h) - g(x0 - 2 * h), 0.0);
  EXPECT_LT(g(x0 + 2 * h) - g(x0 + h), 0.0);
}

TEST(TangentPatternC, DensityAtLeastPi) {
  const PeriodicConfig a = tangent_pattern_c(TangentVariant::a);
  const PeriodicConfig b = tangent_pattern_c(TangentVariant::b);
  EXPECT_NEAR(config_density(a), std::numbers::pi, 1e-12);
  EXPECT_GE(config_density(b), std::numbers::pi - 1e-9);
  EXPECT_GT(config_density(tangent_pattern_c(TangentVariant::b, 0.8)), std::numbers::pi);
  EXPECT_GT(std::numbers::pi, 2 * kTheta);
  EXPECT_THROW(tangent_pattern_c(TangentVariant::b, 1.5), DomainError);
  // Unit spacing is boundary-tight at every center; closer rows cover strictly.
  for (const auto& c : {a, b}) EXPECT_EQ(verify_k_coverage(c, 2, 1e-6).status, CoverageStatus::tight);
  EXPECT_EQ(verify_k_coverage(tangent_pattern_c(TangentVariant::b, 0.8), 2, 1e-6).status,
            CoverageStatus::certified_covered);
}

TEST(BuildPattern, Dispatch) {
  EXPECT_EQ(build_pattern({"triangle"}), triangle_pattern());
  EXPECT_EQ(build_pattern({"pattern_c_a"}), tangent_pattern_c(TangentVariant::a));
  EXPECT_EQ(build_pattern({"pattern_b", 0.5, 1.0, 0.5}), pattern_b(0.5, 1.0, 0.5));
  EXPECT_THROW(build_pattern({"hexagon"}), DomainError);
}
