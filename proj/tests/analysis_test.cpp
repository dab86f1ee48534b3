#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pwtsp/analysis.hpp"
#include "pwtsp/instances.hpp"
#include "pwtsp/tour.hpp"

using namespace pwtsp;

namespace {

constexpr double kPi = std::numbers::pi;

TEST(KShortcutBound, CollinearIsTight) {
  const std::vector<double> unit{1, 1, 1};
  EXPECT_DOUBLE_EQ(k_shortcut_bound(unit, Alpha(2)), 9.0);
  EXPECT_DOUBLE_EQ(power_dist(Point{0, 0}, Point{3, 0}, Alpha(2)), 9.0);
  const std::vector<double> one{1.7};
  EXPECT_DOUBLE_EQ(k_shortcut_bound(one, Alpha(3)), std::pow(1.7, 3));
}

TEST(KShortcutBound, Scope) {
  const std::vector<double> lens{1.0};
  EXPECT_THROW(k_shortcut_bound(lens, Alpha(0.5)), std::invalid_argument);
  EXPECT_THROW(k_shortcut_bound({}, Alpha(2)), std::invalid_argument);
}

TEST(KShortcutBound, RandomChains) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 10000; ++i) {
    std::vector<Point> chain{Point{u(rng), u(rng)}};
    std::vector<double> lens;
    for (int k = 0; k < 3; ++k) {
      chain.push_back(Point{u(rng), u(rng)});
      lens.push_back(euclid_dist(chain[k], chain[k + 1]));
    }
    const double direct = oracle::dist_pow(chain.front(), chain.back(), 2.0);
    EXPECT_LE(direct, k_shortcut_bound(lens, Alpha(2)) * (1 + 1e-12));
  }
}

TEST(RelaxedTriangle, Tau) {
  EXPECT_DOUBLE_EQ(relaxed_triangle_tau(Alpha(2)), 2.0);
  EXPECT_DOUBLE_EQ(relaxed_triangle_tau(Alpha(1)), 1.0);
  EXPECT_DOUBLE_EQ(relaxed_triangle_tau(Alpha(3)), 4.0);
}

TEST(RelaxedTriangle, HoldsAndIsTightAtMidpoint) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-2, 2);
  for (double alpha : {1.1, 1.5, 2.0, 3.0, 4.0}) {
    const Alpha a(alpha);
    const double tau = relaxed_triangle_tau(a);
    for (int i = 0; i < 20000; ++i) {
      const Point p{u(rng), u(rng)}, q{u(rng), u(rng)}, r{u(rng), u(rng)};
      const double rhs = tau * (power_dist(p, q, a) + power_dist(q, r, a));
      EXPECT_LE(power_dist(p, r, a), rhs * (1 + 1e-12));
    }
    const Point p{0, 0}, q{1, 0}, r{2, 0};
    EXPECT_NEAR(power_dist(p, r, a) / (tau * (power_dist(p, q, a) + power_dist(q, r, a))), 1.0, 1e-12);
  }
}

TEST(ThreeShortcut, StraightChain) {
  const auto g = ShortcutGeometry::from_chain(Point{0, 0}, Point{1, 0}, Point{2, 0}, Point{3, 0});
  EXPECT_NEAR(g.psi_ba, 0.0, 1e-15);
  EXPECT_NEAR(g.psi_bc, 0.0, 1e-15);
  EXPECT_EQ(g.delta, 1);
  EXPECT_NEAR(three_shortcut_weight_formula(g), 9.0, 1e-12);
  EXPECT_NEAR(three_shortcut_upper_bound(g), 9.0, 1e-12);
}

TEST(ThreeShortcut, RightAngleChain) {
  const auto g = ShortcutGeometry::from_chain(Point{0, 0}, Point{1, 0}, Point{1, 1}, Point{0, 1});
  EXPECT_NEAR(three_shortcut_weight_formula(g), 1.0, 1e-12);
  EXPECT_NEAR(three_shortcut_upper_bound(g), 5.0, 1e-12);
}

TEST(ThreeShortcut, FormulaMatchesDirectDistance) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 10000; ++i) {
    const Point p0{u(rng), u(rng)}, p1{u(rng), u(rng)}, p2{u(rng), u(rng)}, p3{u(rng), u(rng)};
    const auto g = ShortcutGeometry::from_chain(p0, p1, p2, p3);
    const double direct = oracle::dist_pow(p0, p3, 2.0);
    const double scale = std::pow(g.len_a + g.len_b + g.len_c, 2);
    const double formula = three_shortcut_weight_formula(g);
    EXPECT_NEAR(formula, direct, 1e-9 * scale);
    EXPECT_LE(formula, three_shortcut_upper_bound(g) + 1e-9 * scale);
  }
}

TEST(Young, Holds) {
  EXPECT_TRUE(young_inequality_holds(3, 4, 1));
  EXPECT_TRUE(young_inequality_holds(-3, 4, 0.2));
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-100, 100), e(1e-4, 1e3);
  for (int i = 0; i < 10000; ++i) EXPECT_TRUE(young_inequality_holds(u(rng), u(rng), e(rng)));
}

TEST(HFunction, Values) {
  EXPECT_DOUBLE_EQ(h_function(0, 1), 5.0);
  EXPECT_NEAR(h_function(kPi, 1), 4.0, 1e-12);
  EXPECT_DOUBLE_EQ(h_function(0, 2), 13.0);
  const auto m = h_function_check(2, 10000);
  EXPECT_EQ(m.argmax, 0.0);
  EXPECT_DOUBLE_EQ(m.max_value, 13.0);
}

TEST(HFunction, MaximumAtZeroOnCoarseGrid) {
  for (int twice_k = 2; twice_k <= 16; ++twice_k) {
    const double k = twice_k / 2.0;
    const auto m = h_function_check(k, 2000);
    EXPECT_EQ(m.argmax, 0.0) << "k=" << k;
    for (int i = 0; i < 2000; ++i) EXPECT_LE(h_function(2 * kPi * i / 1999.0, k), m.max_value);
  }
}

TEST(EdgeContributions, TwoCities) {
  const auto r = solve_t3(PointSet({Point{0, 0}, Point{2, 0}}), Alpha(2), SelectionPolicy::geometric());
  const auto c = edge_contributions(r.tour, r.tree, PointSet({Point{0, 0}, Point{2, 0}}), Alpha(2));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_DOUBLE_EQ(c[0].contrib, 8.0);
  EXPECT_DOUBLE_EQ(c[0].ratio, 2.0);
}

TEST(EdgeContributions, ChainMiddleEdge) {
  const auto pts = gen_collinear_chain(4, 1.0);
  const auto r = solve_t3(pts, Alpha(2), SelectionPolicy::arbitrary(), std::pair<VertexId, VertexId>{1, 2});
  const auto c = edge_contributions(r.tour, r.tree, pts, Alpha(2));
  ASSERT_EQ(c.size(), 3u);
  EXPECT_DOUBLE_EQ(c[1].contrib, 4.0);
  EXPECT_DOUBLE_EQ(c[1].ratio, 4.0);
  EXPECT_DOUBLE_EQ(c[0].contrib + c[1].contrib + c[2].contrib, 12.0);
}

TEST(EdgeContributions, SumToCostAndStayBelowFive) {
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto pts = gen_random(3 + seed % 150, 2, seed);
    const auto r = solve_t3(pts, Alpha(2), SelectionPolicy::geometric());
    double sum = 0.0;
    for (const auto& c : edge_contributions(r.tour, r.tree, pts, Alpha(2))) {
      sum += c.contrib;
      worst = std::max(worst, c.ratio);
    }
    EXPECT_NEAR(sum, r.cost, 1e-9 * r.cost);
  }
  EXPECT_LE(worst, 5.0 + 1e-6);
}

TEST(RelatedAngles, HoldUnderGeometricPolicy) {
  std::size_t pairs = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto pts = gen_random(10 + seed, 2, seed);
    const auto r = solve_t3(pts, Alpha(2), SelectionPolicy::geometric());
    for (const auto& p : related_angle_pairs(r.trace, r.tree, pts)) {
      ++pairs;
      EXPECT_GE(p.slack(), -1e-9) << "seed " << seed << " vertex " << p.v;
    }
    EXPECT_TRUE(find_case_three(r.trace, r.tree, pts).empty()) << "seed " << seed;
  }
  EXPECT_GT(pairs, 100u);
}

}  // namespace
