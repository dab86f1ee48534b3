#include <algorithm>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pwtsp/error.hpp"
#include "pwtsp/exact.hpp"
#include "pwtsp/gabriel.hpp"
#include "pwtsp/instances.hpp"
#include "pwtsp/tour.hpp"

using namespace pwtsp;

namespace {

const PointSet kSquare({Point{0, 0}, Point{1, 0}, Point{1, 1}, Point{0, 1}});

TEST(DistanceMatrix, Validation) {
  EXPECT_THROW(DistanceMatrix(2, {0, 1, 2, 0}), std::invalid_argument);
  EXPECT_THROW(DistanceMatrix(2, {1, 1, 1, 0}), std::invalid_argument);
  EXPECT_THROW(DistanceMatrix(2, {0, -1, -1, 0}), std::invalid_argument);
  EXPECT_THROW(DistanceMatrix(2, {0, 1, 1}), std::invalid_argument);
  EXPECT_NO_THROW(DistanceMatrix(2, {0, 1, 1, 0}));
}

TEST(HeldKarp, Triangle) {
  const DistanceMatrix m(3, {0, 2, 3, 2, 0, 4, 3, 4, 0});
  EXPECT_DOUBLE_EQ(held_karp(m).cost, 9.0);
  EXPECT_DOUBLE_EQ(brute_force_permutations(m), 9.0);
}

TEST(HeldKarp, UnitSquare) {
  const auto t = held_karp(DistanceMatrix::from_points(kSquare, Alpha(2)));
  EXPECT_DOUBLE_EQ(t.cost, 4.0);
  EXPECT_EQ(t.order, (std::vector<VertexId>{0, 1, 2, 3}));
  EXPECT_DOUBLE_EQ(brute_force_permutations(DistanceMatrix::from_points(kSquare, Alpha(2))), 4.0);
}

TEST(HeldKarp, MatchesBruteForceOn200Instances) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 3 + seed % 7;
    const double alpha = 1.0 + static_cast<double>(seed % 3);
    const auto pts = gen_random(n, 2, seed);
    const auto m = DistanceMatrix::from_points(pts, Alpha(alpha));
    const auto hk = held_karp(m);
    const double ref = oracle::tsp_enumerate(oracle::power_matrix(pts, alpha));
    EXPECT_NEAR(hk.cost, ref, 1e-12 * ref) << "seed " << seed;
    EXPECT_NEAR(brute_force_permutations(m), ref, 1e-12 * ref) << "seed " << seed;
    std::vector<VertexId> sorted = hk.order;
    std::sort(sorted.begin(), sorted.end());
    for (VertexId i = 0; i < n; ++i) EXPECT_EQ(sorted[i], i);
    EXPECT_EQ(hk.order[0], 0u);
    EXPECT_LT(hk.order[1], hk.order.back());
    EXPECT_NEAR(tour_cost(pts, hk.order, Alpha(alpha)), hk.cost, 1e-12 * ref);
  }
}

TEST(HeldKarp, SizeGuards) {
  EXPECT_THROW(held_karp(DistanceMatrix::from_points(gen_random(23, 2, 1), Alpha(2))), OracleSizeError);
  EXPECT_THROW(brute_force_permutations(DistanceMatrix::from_points(gen_random(11, 2, 1), Alpha(2))), OracleSizeError);
  EXPECT_THROW(held_karp(DistanceMatrix::from_points(gen_random(1, 2, 1), Alpha(2))), OracleSizeError);
}

TEST(HeldKarp, GridAtAlphaOne) {
  const auto t = held_karp(DistanceMatrix::from_points(gen_grid(3, 3), Alpha(1)));
  EXPECT_LE(t.cost, 8 + std::sqrt(2.0) + 1e-12);
  EXPECT_GE(t.cost, 9.0 - 1e-12);
}

TEST(MetricClosure, MatchesFloydWarshall) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto pts = gen_random(12, 2, seed);
    const auto g = build_gabriel(pts, Alpha(2));
    const MetricClosure closure(g);
    std::vector<std::vector<double>> d(12, std::vector<double>(12, INFINITY));
    for (std::size_t i = 0; i < 12; ++i) d[i][i] = 0;
    for (const auto& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = e.weight;
    const auto ref = oracle::floyd(d);
    for (VertexId i = 0; i < 12; ++i) {
      for (VertexId j = 0; j < 12; ++j) {
        EXPECT_NEAR(closure.distances()(i, j), ref[i][j], 1e-12 * (1 + ref[i][j]));
        const auto path = closure.path(i, j);
        ASSERT_FALSE(path.empty());
        EXPECT_EQ(path.front(), i);
        EXPECT_EQ(path.back(), j);
        double len = 0;
        for (std::size_t k = 0; k + 1 < path.size(); ++k) {
          ASSERT_TRUE(g.has_edge(path[k], path[k + 1]));
          len += oracle::dist_pow(pts[path[k]], pts[path[k + 1]], 2.0);
        }
        EXPECT_NEAR(len, ref[i][j], 1e-12 * (1 + ref[i][j]));
      }
    }
  }
}

TEST(RevTsp, ChainWalksOutAndBack) {
  const auto r = rev_tsp_exact(gen_collinear_chain(4, 1.0), Alpha(2));
  EXPECT_DOUBLE_EQ(r.cost, 6.0);
  EXPECT_EQ(r.base, ClosureBase::Gabriel);
  EXPECT_EQ(r.walk.size(), 6u);
  EXPECT_NEAR(tour_cost(gen_collinear_chain(4, 1.0), r.walk, Alpha(2)), 6.0, 1e-12);
  EXPECT_LT(r.cost, held_karp(DistanceMatrix::from_points(gen_collinear_chain(4, 1.0), Alpha(2))).cost);
  EXPECT_EQ(std::count(r.revisit.begin(), r.revisit.end(), true), 4);
}

TEST(RevTsp, TriangleEqualsTsp) {
  const PointSet tri({Point{0, 0}, Point{1, 0}, Point{0.4, 0.9}});
  const auto r = rev_tsp_exact(tri, Alpha(2));
  EXPECT_NEAR(r.cost, held_karp(DistanceMatrix::from_points(tri, Alpha(2))).cost, 1e-12);
  EXPECT_EQ(r.walk.size(), 3u);
}

TEST(RevTsp, MatchesClosureEnumeration) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 2 + seed % 6;
    for (double alpha : {1.5, 2.0, 3.0}) {
      const auto pts = gen_random(n, 2, seed);
      const auto ref = oracle::tsp_enumerate(oracle::floyd(oracle::power_matrix(pts, alpha)));
      const auto r = rev_tsp_exact(pts, Alpha(alpha));
      EXPECT_NEAR(r.cost, ref, 1e-9 * ref) << "seed " << seed << " alpha " << alpha;
      EXPECT_NEAR(tour_cost(pts, r.walk, Alpha(alpha)), r.cost, 1e-9 * ref);
      std::vector<bool> seen(n);
      for (auto v : r.walk) seen[v] = true;
      EXPECT_EQ(std::count(seen.begin(), seen.end(), true), static_cast<long>(n));
    }
  }
}

TEST(RevTsp, BaseSelection) {
  const auto pts = gen_random(6, 2, 1);
  EXPECT_EQ(rev_tsp_exact(pts, Alpha(1.5)).base, ClosureBase::Complete);
  EXPECT_EQ(rev_tsp_exact(pts, Alpha(2)).base, ClosureBase::Gabriel);
  EXPECT_EQ(rev_tsp_exact(gen_random(6, 3, 1), Alpha(2)).base, ClosureBase::Complete);
  EXPECT_THROW(rev_tsp_exact(pts, Alpha(1.5), ClosureBase::Gabriel), std::invalid_argument);
  EXPECT_THROW(rev_tsp_exact(gen_random(23, 2, 1), Alpha(2)), OracleSizeError);
  EXPECT_EQ(rev_tsp_exact(PointSet({Point{1, 1}}), Alpha(2)).cost, 0.0);
}

}  // namespace
