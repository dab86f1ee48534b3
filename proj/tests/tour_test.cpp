#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "pwtsp/instances.hpp"
#include "pwtsp/tour.hpp"

using namespace pwtsp;

namespace {

std::vector<std::size_t> leg_sizes(const Tour& t) {
  std::vector<std::size_t> out;
  for (const auto& l : t.legs) out.push_back(l.k());
  return out;
}

TEST(CycleInCube, ChainFromMiddleEdge) {
  const auto pts = gen_collinear_chain(4, 1.0);
  const auto r = solve_t3(pts, Alpha(2), SelectionPolicy::arbitrary(), std::pair<VertexId, VertexId>{1, 2});
  EXPECT_EQ(r.tour.order, (std::vector<VertexId>{0, 1, 2, 3}));
  EXPECT_EQ(leg_sizes(r.tour), (std::vector<std::size_t>{1, 1, 1, 3}));
  EXPECT_DOUBLE_EQ(r.cost, 12.0);
  EXPECT_DOUBLE_EQ(r.mst_weight, 3.0);
  EXPECT_DOUBLE_EQ(r.ratio_vs_mst(), 4.0);
  EXPECT_EQ(find_tour_violation(r.tree, r.tour, 3), std::nullopt);
}

TEST(CycleInCube, ChainFromDefaultRoot) {
  // Root edge 01: T1 = {0}, T2 = {1,2,3} splits at 2 and returns 1 -> 3.
  const auto r = solve_t3(gen_collinear_chain(4, 1.0), Alpha(2), SelectionPolicy::arbitrary());
  EXPECT_EQ(r.tour.order, (std::vector<VertexId>{0, 1, 3, 2}));
  EXPECT_DOUBLE_EQ(r.cost, 1 + 4 + 1 + 4);
}

TEST(CycleInCube, StarFromRightLeaf) {
  const PointSet pts({Point{0, 0}, Point{1, 0}, Point{0, 1}, Point{-1, 0}});
  for (auto policy : {SelectionPolicy::arbitrary(), SelectionPolicy::geometric()}) {
    const auto r = solve_t3(pts, Alpha(2), policy, std::pair<VertexId, VertexId>{0, 1});
    EXPECT_EQ(find_tour_violation(r.tree, r.tour, 3), std::nullopt);
    EXPECT_EQ(r.tour.order.size(), 4u);
  }
}

TEST(CycleInCube, TwoCities) {
  const PointSet pts({Point{0, 0}, Point{0, 3}});
  const auto r = solve_t3(pts, Alpha(2), SelectionPolicy::geometric());
  EXPECT_EQ(r.tour.order, (std::vector<VertexId>{0, 1}));
  ASSERT_EQ(r.tour.legs.size(), 2u);
  EXPECT_EQ(r.tour.legs[0].edges, std::vector<EdgeId>{0});
  EXPECT_EQ(r.tour.legs[1].edges, std::vector<EdgeId>{0});
  EXPECT_DOUBLE_EQ(r.cost, 18.0);
}

TEST(CycleInCube, SingleCity) {
  const auto r = solve_t3(PointSet({Point{1, 1}}), Alpha(2), SelectionPolicy::geometric());
  EXPECT_EQ(r.tour.order, std::vector<VertexId>{0});
  EXPECT_EQ(r.cost, 0.0);
}

TEST(CycleInCube, RejectsNonTreeRootEdge) {
  EXPECT_THROW(solve_t3(gen_collinear_chain(4, 1.0), Alpha(2), SelectionPolicy::arbitrary(),
                        std::pair<VertexId, VertexId>{0, 2}),
               std::invalid_argument);
}

TEST(CycleInCube, TraceReconstructsLegs) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto pts = gen_random(3 + seed * 3, 2, seed);
    const auto r = solve_t3(pts, Alpha(2), SelectionPolicy::geometric());
    std::multiset<std::vector<EdgeId>> from_trace, from_legs;
    for (const auto& s : r.trace) {
      auto e = s.edges;
      if (e.front() > e.back()) std::reverse(e.begin(), e.end());
      from_trace.insert(e);
    }
    for (const auto& l : r.tour.legs) {
      auto e = l.edges;
      if (e.front() > e.back()) std::reverse(e.begin(), e.end());
      from_legs.insert(e);
    }
    EXPECT_EQ(from_trace, from_legs) << "seed " << seed;
    EXPECT_EQ(r.trace.size(), pts.size());
  }
}

TEST(CycleInCube, ValidForAllPoliciesAndShapes) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 2 + seed * 5 % 200;
    const auto pts = gen_random(n, 1 + seed % 3, seed);
    for (auto policy : {SelectionPolicy::arbitrary(), SelectionPolicy::geometric(), SelectionPolicy::random(seed)}) {
      const auto r = solve_t3(pts, Alpha(2), policy);
      EXPECT_EQ(find_tour_violation(r.tree, r.tour, 3), std::nullopt) << "seed " << seed;
      EXPECT_NEAR(r.cost, tour_cost(pts, r.tour.order, Alpha(2)), 1e-12 * r.cost);
    }
  }
}

TEST(CycleInCube, LongPathNeedsNoDeepRecursion) {
  const std::size_t n = 100000;
  const auto pts = gen_collinear_chain(n, 1.0);
  std::vector<TreeEdge> edges;
  for (VertexId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0, 1.0});
  const Tree tree(n, edges);
  const auto r = cycle_in_cube(tree, pts, static_cast<EdgeId>(n / 2), SelectionPolicy::geometric());
  EXPECT_EQ(find_tour_violation(tree, r.tour, 3), std::nullopt);
  EXPECT_LE(tour_cost(pts, r.tour.order, Alpha(2)), 5.0 * static_cast<double>(n - 1));
}

TEST(CycleInCube, RandomPolicyIsSeeded) {
  const auto pts = gen_random(60, 2, 3);
  const auto a = solve_t3(pts, Alpha(2), SelectionPolicy::random(8));
  const auto b = solve_t3(pts, Alpha(2), SelectionPolicy::random(8));
  EXPECT_EQ(a.tour.order, b.tour.order);
}

TEST(DoubleTree, ChainClosedForm) {
  for (std::size_t n : {2u, 3u, 8u, 100u}) {
    const auto r = solve_double_tree_naive(gen_collinear_chain(n, 1.0), Alpha(2));
    const double m = static_cast<double>(n - 1);
    EXPECT_DOUBLE_EQ(r.cost, m + m * m);
    EXPECT_DOUBLE_EQ(r.ratio_vs_mst(), static_cast<double>(n));
  }
}

TEST(DoubleTree, TriangleAndSquare) {
  const PointSet tri({Point{0, 0}, Point{4, 0}, Point{0, 3}});
  EXPECT_DOUBLE_EQ(solve_double_tree_naive(tri, Alpha(1)).cost, 12.0);
  const PointSet sq({Point{0, 0}, Point{1, 0}, Point{1, 1}, Point{0, 1}});
  EXPECT_DOUBLE_EQ(solve_double_tree_naive(sq, Alpha(2)).cost, 4.0);
}

TEST(DoubleTree, LegsCoverTreeTwice) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto pts = gen_random(50, 2, seed);
    const auto r = solve_double_tree_naive(pts, Alpha(2));
    EXPECT_EQ(find_tour_violation(r.tree, r.tour, pts.size()), std::nullopt);
  }
}

TEST(TourViolation, DetectsBrokenTours) {
  const auto pts = gen_collinear_chain(4, 1.0);
  auto r = solve_t3(pts, Alpha(2), SelectionPolicy::arbitrary(), std::pair<VertexId, VertexId>{1, 2});
  auto bad = r.tour;
  bad.order[1] = 0;
  EXPECT_NE(find_tour_violation(r.tree, bad, 3), std::nullopt);
  EXPECT_NE(find_tour_violation(r.tree, r.tour, 2), std::nullopt);  // the closing leg has k = 3
  bad = r.tour;
  bad.legs[0].edges = {1};
  EXPECT_NE(find_tour_violation(r.tree, bad, 3), std::nullopt);
}

}  // namespace
