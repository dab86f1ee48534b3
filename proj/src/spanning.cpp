#include "pwtsp/spanning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

namespace pwtsp {

Tree::Tree(std::size_t n, std::vector<TreeEdge> edges) : edges_(std::move(edges)), adjacency_(n) {
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.v >= n || e.u == e.v) throw std::invalid_argument("tree edge out of range");
  }
  std::sort(edges_.begin(), edges_.end(), [](const TreeEdge& a, const TreeEdge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    adjacency_[edges_[id].u].push_back({edges_[id].v, id});
    adjacency_[edges_[id].v].push_back({edges_[id].u, id});
  }
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end(),
              [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
  }
}

VertexId Tree::shared_vertex(EdgeId a, EdgeId b) const {
  const auto& ea = edges_[a];
  const auto& eb = edges_[b];
  if (eb.touches(ea.u)) return ea.u;
  if (eb.touches(ea.v)) return ea.v;
  throw std::invalid_argument("edges " + std::to_string(a) + " and " + std::to_string(b) +
                              " do not share a vertex");
}

double Tree::total_weight() const {
  return std::accumulate(edges_.begin(), edges_.end(), 0.0,
                         [](double s, const TreeEdge& e) { return s + e.alpha_weight; });
}

Tree build_mst(const PointSet& points, Alpha a) {
  const std::size_t n = points.size();
  std::vector<TreeEdge> edges;
  if (n <= 1) return Tree(n, std::move(edges));
  edges.reserve(n - 1);

  constexpr double kInf = std::numeric_limits<double>::infinity();
  constexpr VertexId kNone = std::numeric_limits<VertexId>::max();
  std::vector<double> key(n, kInf);  // squared distance to the tree
  std::vector<VertexId> parent(n, kNone);
  std::vector<bool> in_tree(n, false);

  auto ordered = [](VertexId x, VertexId y) { return std::minmax(x, y); };
  // Candidate edges are ranked by squared length, then by (min, max) endpoints.
  auto rank = [&](double d, VertexId p, VertexId v) { return std::tuple(d, ordered(p, v)); };

  in_tree[0] = true;
  for (VertexId v = 1; v < n; ++v) {
    key[v] = squared_dist(points[0], points[v]);
    parent[v] = 0;
  }
  for (std::size_t step = 1; step < n; ++step) {
    VertexId pick = kNone;
    for (VertexId v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      if (pick == kNone || rank(key[v], parent[v], v) < rank(key[pick], parent[pick], pick)) {
        pick = v;
      }
    }
    in_tree[pick] = true;
    const double sq = key[pick];
    edges.push_back({parent[pick], pick, std::sqrt(sq),
                     a.value() == 2.0 ? sq : std::pow(sq, a.value() / 2.0)});
    for (VertexId v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      const double d = squared_dist(points[pick], points[v]);
      if (rank(d, pick, v) < rank(key[v], parent[v], v)) {
        key[v] = d;
        parent[v] = pick;
      }
    }
  }
  return Tree(n, std::move(edges));
}

double mst_lower_bound(const PointSet& points, Alpha a) { return build_mst(points, a).total_weight(); }

}  // namespace pwtsp
