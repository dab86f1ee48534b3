#include "pwtsp/gabriel.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>
#include <string>

#include "pwtsp/error.hpp"

namespace pwtsp {

namespace {
constexpr double kRightAngleTolerance = 1e-12;
}

void WeightedGraph::add_edge(VertexId u, VertexId v, double weight) {
  if (u == v) throw std::invalid_argument("self-loop at " + std::to_string(u));
  if (u >= vertex_count() || v >= vertex_count()) throw std::invalid_argument("vertex out of range");
  if (!(weight > 0.0)) throw std::invalid_argument("edge weights must be positive");
  if (has_edge(u, v)) throw std::invalid_argument("parallel edge");
  edges_.push_back({std::min(u, v), std::max(u, v), weight});
  adjacency_[u].emplace_back(v, weight);
  adjacency_[v].emplace_back(u, weight);
}

bool WeightedGraph::has_edge(VertexId u, VertexId v) const {
  const auto& adj = adjacency_[u];
  return std::any_of(adj.begin(), adj.end(), [v](const auto& nb) { return nb.first == v; });
}

WeightedGraph complete_power_graph(const PointSet& points, Alpha a) {
  WeightedGraph g(points.size());
  for (VertexId p = 0; p < points.size(); ++p) {
    for (VertexId q = p + 1; q < points.size(); ++q) g.add_edge(p, q, power_dist(points[p], points[q], a));
  }
  return g;
}

WeightedGraph build_gabriel(const PointSet& points, Alpha a) {
  if (points.size() > 1 && points.dim() != 2) {
    throw InstanceError("Gabriel graphs are built for planar points only");
  }
  const std::size_t n = points.size();
  WeightedGraph g(n);
  constexpr double kLimit = std::numbers::pi / 2 + kRightAngleTolerance;
  for (VertexId p = 0; p < n; ++p) {
    for (VertexId q = p + 1; q < n; ++q) {
      bool empty_disk = true;
      for (VertexId r = 0; r < n && empty_disk; ++r) {
        if (r == p || r == q) continue;
        empty_disk = angle_between(points[r], points[p], points[q]).angle <= kLimit;
      }
      if (empty_disk) g.add_edge(p, q, power_dist(points[p], points[q], a));
    }
  }
  return g;
}

bool two_leg_replacement_check(PointView p, PointView r, PointView q, Alpha a) {
  if (a.value() < 2.0) throw std::invalid_argument("two-leg replacement needs alpha >= 2");
  if (angle_between(r, p, q).angle < std::numbers::pi / 2) return true;
  const double direct = power_dist(p, q, a);
  const double via = power_dist(p, r, a) + power_dist(r, q, a);
  return via <= direct + kBoundTolerance * direct;
}

}  // namespace pwtsp
