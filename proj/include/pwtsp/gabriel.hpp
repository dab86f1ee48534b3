#pragma once

#include <cstddef>
#include <vector>

#include "pwtsp/geometry.hpp"
#include "pwtsp/spanning.hpp"

namespace pwtsp {

struct GraphEdge {
  VertexId u;  // u < v
  VertexId v;
  double weight;
};

// Simple undirected graph with positive edge weights.
class WeightedGraph {
 public:
  explicit WeightedGraph(std::size_t n = 0) : adjacency_(n) {}

  // Throws std::invalid_argument on self-loops, parallel edges or
  // non-positive weights.
  void add_edge(VertexId u, VertexId v, double weight);
  bool has_edge(VertexId u, VertexId v) const;

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  // (neighbor, weight) pairs
  const std::vector<std::pair<VertexId, double>>& neighbors(VertexId v) const {
    return adjacency_[v];
  }

 private:
  std::vector<GraphEdge> edges_;
  std::vector<std::vector<std::pair<VertexId, double>>> adjacency_;
};

// Complete graph with weights |pq|^alpha.
WeightedGraph complete_power_graph(const PointSet& points, Alpha a);

// Gabriel graph of planar points: pq is an edge iff every other point r sees
// pq at an angle of at most pi/2 (r on the boundary circle keeps the edge).
// Edge weights are |pq|^alpha.
WeightedGraph build_gabriel(const PointSet& points, Alpha a);

// Predicate form of the two-leg replacement rule: false only when
// angle(p r q) >= pi/2 but |pr|^alpha + |rq|^alpha exceeds |pq|^alpha.
// Requires alpha >= 2.
bool two_leg_replacement_check(PointView p, PointView r, PointView q, Alpha a);

}  // namespace pwtsp
