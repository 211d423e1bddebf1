#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "kcover/error.hpp"
#include "kcover/coverage.hpp"
#include "kcover/density.hpp"
#include "kcover/patterns.hpp"
#include "oracles.hpp"

using namespace kcover;

namespace {
const double kSqrt3 = std::sqrt(3.0);
}

TEST(Theta, IsPiOverHexagonArea) {
  EXPECT_NEAR(kTheta, 1.209200, 1e-6);
  EXPECT_NEAR(kTheta, 2 * std::numbers::pi / std::sqrt(27.0), 1e-15);
}

TEST(ConfigDensity, Examples) {
  EXPECT_NEAR(config_density(PeriodicConfig(Basis({1, 0}, {0, 1}), {{0, 0}}, std::sqrt(0.5))),
              std::numbers::pi / 2, 1e-12);
  EXPECT_NEAR(config_density(PeriodicConfig(Basis({kSqrt3, 0}, {kSqrt3 / 2, 1.5}), {{0, 0}}, 1.0)),
              1.209200, 1e-6);
  EXPECT_NEAR(config_density(triangle_pattern()), 2.418399, 1e-6);
}

TEST(CellDensity, Examples) {
  const PeriodicConfig hex(Basis({kSqrt3, 0}, {kSqrt3 / 2, 1.5}), {{0, 0}}, 1.0);
  EXPECT_NEAR(cell_density(voronoi_cell(hex, 0), 1.0), kTheta, 1e-12);
  EXPECT_NEAR(cell_density(voronoi_cell(triangle_pattern(), 0), 1.0), 4 * std::numbers::pi / std::sqrt(27.0),
              1e-12);
  const PeriodicConfig sq(Basis({1, 0}, {0, 1}), {{0, 0}}, 1.0);
  EXPECT_NEAR(cell_density(voronoi_cell(sq, 0), std::sqrt(0.5)), 1.570796, 1e-6);
}

TEST(TothBound, Values) {
  // (pi/3)/sin(pi/3) = 2 pi / (3 sqrt 3) = theta.
  EXPECT_NEAR(toth_lower_bound(1), kTheta, 1e-15);
  EXPECT_NEAR(toth_lower_bound(2), 2 * std::numbers::pi / 3, 1e-15);
  EXPECT_NEAR(toth_lower_bound(2), 2.094395, 1e-6);
  // Direct evaluation: (pi/3) / sin(pi/9) = 1.04719755 / 0.34202014.
  EXPECT_NEAR(toth_lower_bound(3), 3.061801, 1e-6);
  EXPECT_THROW(toth_lower_bound(0), DomainError);
}

TEST(TothBound, StrictlyIncreasing) {
  for (int k = 1; k < 50; ++k) EXPECT_LT(toth_lower_bound(k), toth_lower_bound(k + 1));
}

TEST(KnownValues, Table) {
  EXPECT_NEAR(*known_value("theta"), 1.209200, 1e-6);
  EXPECT_NEAR(*known_value("2θ"), 2.418399, 1e-6);
  EXPECT_NEAR(*known_value("blundon_2"), 2.418399, 1e-6);
  EXPECT_NEAR(*known_value("blundon_3"), 3.435336, 1e-6);
  EXPECT_NEAR(*known_value("blundon_4"), 4.362792, 1e-6);
  EXPECT_EQ(*known_value("danzer_low"), 2.094);
  EXPECT_EQ(*known_value("danzer_high"), 2.347);
  EXPECT_FALSE(known_value("nope").has_value());
  EXPECT_FALSE(blundon_density(5).has_value());
}

TEST(DensityReportTest, Fields) {
  const DensityReport r = density_report(triangle_pattern(), 2);
  EXPECT_NEAR(r.density, 2.418399, 1e-6);
  EXPECT_NEAR(r.normalized, 2.0, 1e-12);
  EXPECT_NEAR(r.toth_bound, 2.094395, 1e-6);
  EXPECT_TRUE(r.meets_toth);
  EXPECT_EQ(r.k, 2);
  EXPECT_FALSE(density_report(triangle_pattern().with_radius(0.5), 2).meets_toth);
}

TEST(DensityProperties, CongruentCellsGiveTheConfigDensity) {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const PeriodicConfig c = oracle::random_config(rng, 10.0, 2);
    if (!all_cells_congruent(c).congruent) continue;
    for (const auto& cell : voronoi_cells(c)) EXPECT_NEAR(cell_density(cell, c.radius()), config_density(c), 1e-9);
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

TEST(DensityProperties, ScaleInvariance) {
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 100; ++trial) {
    const PeriodicConfig c = oracle::random_config(rng);
    for (double lambda : {0.1, 0.5, 2.0, 7.3, 100.0})
      EXPECT_NEAR(config_density(c.scaled(lambda)), config_density(c), 1e-12);
  }
}

TEST(DensityProperties, CertifiedCoveringsMeetTothBound) {
  std::mt19937_64 rng(19);
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const PeriodicConfig shape = oracle::random_config(rng, 8.0, 3);
    for (int k = 1; k <= 3; ++k) {
      // Disks just large enough to k-cover.
      const PeriodicConfig c = shape.with_radius(covering_radius(shape, k, 1e-6).high);
      const auto cert = verify_k_coverage(c, k, 1e-6);
      ASSERT_TRUE(cert.status == CoverageStatus::certified_covered || cert.status == CoverageStatus::tight);
      EXPECT_GE(config_density(c), toth_lower_bound(k) - 1e-9);
      ++checked;
    }
  }
  EXPECT_EQ(checked, 90);
}
