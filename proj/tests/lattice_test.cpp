#include <gtest/gtest.h>

#include <random>

#include "kcover/error.hpp"
#include "kcover/lattice.hpp"
#include "oracles.hpp"

using namespace kcover;

namespace {

PeriodicConfig unit_square() { return PeriodicConfig(Basis({1, 0}, {0, 1}), {{0, 0}}, 1.0); }

// Integer coordinates of w in basis b, if it is a lattice vector.
bool integral_in(const Basis& b, Vec2 w) {
  const Point st = b.fractional(w);
  return std::abs(st.x - std::round(st.x)) < 1e-8 && std::abs(st.y - std::round(st.y)) < 1e-8;
}

}  // namespace

TEST(ReduceBasis, AlreadyReduced) {
  const Basis r = reduce_basis(Basis({1, 0}, {0, 1}));
  EXPECT_EQ(r.u(), (Vec2{1, 0}));
  EXPECT_EQ(r.v(), (Vec2{0, 1}));
}

TEST(ReduceBasis, SkewedSquareLattice) {
  // Brute force over |i|, |j| <= 8 of i*(1,0) + j*(5,1): the shortest vector
  // and the shortest vector independent of it both have length 1.
  const Basis r = reduce_basis(Basis({1, 0}, {5, 1}));
  EXPECT_NEAR(norm(r.u()), 1.0, 1e-12);
  EXPECT_NEAR(norm(r.v()), 1.0, 1e-12);
  EXPECT_EQ(r.u(), (Vec2{1, 0}));
  EXPECT_EQ(r.v(), (Vec2{0, 1}));
}

TEST(ReduceBasis, DegenerateLattice) {
  try {
    Basis({2, 0}, {1, 1e-15});
    FAIL() << "expected GeometryError";
  } catch (const GeometryError& e) {
    EXPECT_STREQ(e.what(), "degenerate lattice");
  }
  EXPECT_THROW(Basis({1, 1}, {2, 2}), GeometryError);
}

TEST(ReduceBasis, NegativeOrientationIsFlipped) {
  const Basis b({0, 1}, {1, 0});
  EXPECT_GT(b.det(), 0.0);
}

TEST(ReduceBasis, RandomBasesSatisfyReductionConditions) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> x(-3, 3);
  std::uniform_int_distribution<int> m(-6, 6);
  for (int trial = 0; trial < 2000; ++trial) {
    Basis base({x(rng), x(rng)}, {x(rng), x(rng)});
    if (base.det() < 0.05) continue;
    // Scramble with a unimodular matrix.
    const int a = m(rng);
    const Basis skew(base.u() + a * base.v(), base.v());
    const Basis r = reduce_basis(skew);
    EXPECT_LE(norm(r.u()), norm(r.v()) + 1e-12);
    EXPECT_LE(std::abs(dot(r.u(), r.v())), 0.5 * norm2(r.u()) + 1e-12);
    EXPECT_NEAR(r.det(), skew.det(), 1e-12 * std::max(1.0, skew.det()) * 10);
    // Same lattice: each basis expresses the other with integer coordinates.
    EXPECT_TRUE(integral_in(skew, r.u()));
    EXPECT_TRUE(integral_in(skew, r.v()));
    EXPECT_TRUE(integral_in(r, skew.u()));
    EXPECT_TRUE(integral_in(r, skew.v()));
    // Idempotent.
    const Basis rr = reduce_basis(r);
    EXPECT_NEAR(norm(rr.u()), norm(r.u()), 1e-12);
    EXPECT_NEAR(norm(rr.v()), norm(r.v()), 1e-12);
  }
}

TEST(PeriodicConfigTest, OffsetsAreWrappedIntoTheFundamentalDomain) {
  const PeriodicConfig c(Basis({2, 0}, {0, 3}), {{-0.5, 7.0}}, 1.0);
  EXPECT_NEAR(c.offsets()[0].x, 1.5, 1e-12);
  EXPECT_NEAR(c.offsets()[0].y, 1.0, 1e-12);
  // Re-wrapping an already wrapped config changes nothing.
  const PeriodicConfig again(c.basis(), c.offsets(), c.radius());
  EXPECT_EQ(again, c);
}

TEST(PeriodicConfigTest, RejectsCoincidentOffsetsAndBadRadius) {
  EXPECT_THROW(PeriodicConfig(Basis({1, 0}, {0, 1}), {{0, 0}, {1, 1}}, 1.0), GeometryError);
  EXPECT_THROW(PeriodicConfig(Basis({1, 0}, {0, 1}), {{0.2, 0.2}, {0.2 + 1e-11, 0.2}}, 1.0), GeometryError);
  EXPECT_THROW(PeriodicConfig(Basis({1, 0}, {0, 1}), {{0, 0}}, 0.0), GeometryError);
  EXPECT_THROW(PeriodicConfig(Basis({1, 0}, {0, 1}), {}, 1.0), GeometryError);
}

TEST(EnumerateCenters, CornersOfTheUnitSquare) {
  const auto pts = enumerate_centers(unit_square(), {0, 0, 1, 1}, 0.0);
  ASSERT_EQ(pts.size(), 4u);
  EXPECT_EQ(pts[0], (Point{0, 0}));
  EXPECT_EQ(pts[1], (Point{0, 1}));
  EXPECT_EQ(pts[2], (Point{1, 0}));
  EXPECT_EQ(pts[3], (Point{1, 1}));
}

TEST(EnumerateCenters, MarginOneAndAHalf) {
  // Direct enumeration over an integer window: 16 points, the grid -1..2 squared.
  const auto pts = enumerate_centers(unit_square(), {0, 0, 1, 1}, 1.5);
  ASSERT_EQ(pts.size(), 16u);
  for (const Point& p : pts) {
    EXPECT_GE(p.x, -1.0);
    EXPECT_LE(p.x, 2.0);
    EXPECT_GE(p.y, -1.0);
    EXPECT_LE(p.y, 2.0);
  }
}

TEST(EnumerateCenters, DegenerateRectIsADiskQuery) {
  std::mt19937_64 rng(9);
  const PeriodicConfig c = oracle::random_config(rng);
  const Point p{0.3, -0.7};
  const auto pts = enumerate_centers(c, Rect::around(p), c.radius());
  const auto all = oracle::raw_centers(c, 12);
  std::size_t expected = 0;
  for (const Point& q : all) expected += distance(p, q) <= c.radius();
  EXPECT_EQ(pts.size(), expected);
  for (const Point& q : pts) EXPECT_LE(distance(p, q), c.radius() + 1e-12);
}

TEST(EnumerateCenters, MatchesBruteForceOnRandomConfigs) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> pos(-4, 4), len(0, 3), marg(0, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const PeriodicConfig c = oracle::random_config(rng);
    const double x0 = pos(rng), y0 = pos(rng);
    const Rect rect{x0, y0, x0 + len(rng), y0 + len(rng)};
    const double margin = marg(rng);
    const auto pts = enumerate_centers(c, rect, margin);
    std::size_t expected = 0;
    for (const Point& q : oracle::raw_centers(c, 30)) expected += rect.distance_to(q) <= margin;
    EXPECT_EQ(pts.size(), expected);
    EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end(), lex_less));

    // Sandwich: everything within a smaller margin is still present.
    const double slack = 2 * norm(c.basis().u()) + 2 * norm(c.basis().v());
    for (const Point& q : enumerate_centers(c, rect, std::max(0.0, margin - slack)))
      EXPECT_TRUE(std::find(pts.begin(), pts.end(), q) != pts.end());
  }
}

TEST(EnumerateCenters, ScalesWithTheConfiguration) {
  std::mt19937_64 rng(33);
  const PeriodicConfig c = oracle::random_config(rng);
  const double lambda = 2.5;
  const auto a = enumerate_centers(c, {0, 0, 1, 1}, 2.0);
  const auto b = enumerate_centers(c.scaled(lambda), {0, 0, lambda, lambda}, 2.0 * lambda);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_NEAR(b[i].x, lambda * a[i].x, 1e-9);
    EXPECT_NEAR(b[i].y, lambda * a[i].y, 1e-9);
  }
}
