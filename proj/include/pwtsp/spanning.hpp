#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "pwtsp/geometry.hpp"

namespace pwtsp {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct TreeEdge {
  VertexId u;  // u < v
  VertexId v;
  double euclid_len;
  double alpha_weight;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool touches(VertexId x) const { return x == u || x == v; }
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

// Spanning tree over a point set. Edges are stored sorted by (u, v) with
// u < v, so edge 0 is the lexicographically smallest edge; adjacency lists
// are sorted by neighbor id.
class Tree {
 public:
  Tree() = default;
  Tree(std::size_t n, std::vector<TreeEdge> edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const TreeEdge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<TreeEdge>& edges() const { return edges_; }
  const std::vector<Incidence>& incident(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }

  // Vertex shared by two edges; throws std::invalid_argument when disjoint.
  VertexId shared_vertex(EdgeId a, EdgeId b) const;
  double total_weight() const;

 private:
  std::vector<TreeEdge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

// Euclidean minimum spanning tree by dense Prim. The tree is the same for
// every alpha > 0; the edges carry |uv|^alpha as their weight. Among
// equal-length candidates the lexicographically smaller (min, max) endpoint
// pair wins.
Tree build_mst(const PointSet& points, Alpha a);

// Sum of |e|^alpha over the MST edges, a lower bound for the optimal tour.
double mst_lower_bound(const PointSet& points, Alpha a);

}  // namespace pwtsp
