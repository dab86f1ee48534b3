#pragma once

#include <cstddef>
#include <vector>

#include "pwtsp/gabriel.hpp"
#include "pwtsp/geometry.hpp"
#include "pwtsp/spanning.hpp"

namespace pwtsp {

// Largest instance the Held-Karp table is allowed to allocate for.
inline constexpr std::size_t kHeldKarpMaxCities = 22;
inline constexpr std::size_t kBruteForceMaxCities = 10;

// Symmetric, zero-diagonal, finite, non-negative n x n matrix.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  // Throws std::invalid_argument if `values` (row-major) violates the
  // invariants.
  DistanceMatrix(std::size_t n, std::vector<double> values);

  static DistanceMatrix from_points(const PointSet& points, Alpha a);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
};

struct ExactTour {
  double cost;
  // Starts at 0; oriented so that order[1] < order.back().
  std::vector<VertexId> order;
};

// Held-Karp dynamic program over subsets. 2 <= n <= kHeldKarpMaxCities,
// otherwise OracleSizeError.
ExactTour held_karp(const DistanceMatrix& matrix);

// Exhaustive minimum over all cycles through vertex 0.
// 2 <= n <= kBruteForceMaxCities, otherwise OracleSizeError.
double brute_force_permutations(const DistanceMatrix& matrix);

// All-pairs shortest paths of a graph, with the predecessor of every target
// on its shortest path from every source.
class MetricClosure {
 public:
  explicit MetricClosure(const WeightedGraph& graph);

  const DistanceMatrix& distances() const { return distances_; }
  // Vertex sequence source .. target along a shortest path.
  std::vector<VertexId> path(VertexId source, VertexId target) const;

 private:
  DistanceMatrix distances_;
  std::vector<std::vector<VertexId>> predecessor_;
};

enum class ClosureBase {
  Auto,      // Gabriel graph for planar points with alpha >= 2, complete graph otherwise
  Gabriel,
  Complete,
};

struct RevTspResult {
  double cost = 0.0;
  // Closed walk starting at city 0; the step back to walk[0] is implied.
  std::vector<VertexId> walk;
  // Per walk position: the city occurs more than once in the walk.
  std::vector<bool> revisit;
  ClosureBase base = ClosureBase::Auto;
};

// Optimal tour with revisits: Held-Karp over the metric closure of the
// chosen base graph, expanded back into a walk.
RevTspResult rev_tsp_exact(const PointSet& points, Alpha a, ClosureBase base = ClosureBase::Auto);

}  // namespace pwtsp
