#include "pwtsp/analysis.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "pwtsp/error.hpp"

namespace pwtsp {

namespace {

double apow(double x, double alpha) { return alpha == 2.0 ? x * x : std::pow(x, alpha); }

// Bridge shortcut generated by each call edge.
std::unordered_map<EdgeId, const TracedShortcut*> bridges_by_call(const ShortcutTrace& trace) {
  std::unordered_map<EdgeId, const TracedShortcut*> out;
  for (const auto& s : trace) {
    if (s.role == ShortcutRole::Bridge) out[s.call_edge] = &s;
  }
  return out;
}

// Side edge of a 3-edge bridge that touches v, if any.
EdgeId side_at(const TracedShortcut& bridge, const Tree& tree, VertexId v) {
  const EdgeId first = bridge.edges.front();
  const EdgeId last = bridge.edges.back();
  if (tree.edge(first).touches(v)) return first;
  if (tree.edge(last).touches(v)) return last;
  return std::numeric_limits<EdgeId>::max();
}

double psi_at(const Tree& tree, const PointSet& points, VertexId v, EdgeId s, EdgeId t) {
  return angle_between(points[v], points[tree.edge(s).other(v)], points[tree.edge(t).other(v)]).psi;
}

}  // namespace

double k_shortcut_bound(std::span<const double> edge_lengths, Alpha a) {
  if (a.value() < 1.0) throw std::invalid_argument("k-shortcut bound needs alpha >= 1");
  if (edge_lengths.empty()) throw std::invalid_argument("k-shortcut bound needs k >= 1");
  double sum = 0.0;
  for (double len : edge_lengths) {
    if (!(len > 0.0)) throw std::invalid_argument("edge lengths must be positive");
    sum += apow(len, a.value());
  }
  return std::pow(static_cast<double>(edge_lengths.size()), a.value() - 1.0) * sum;
}

double relaxed_triangle_tau(Alpha a) { return std::pow(2.0, a.value() - 1.0); }

ShortcutGeometry ShortcutGeometry::from_chain(PointView p0, PointView p1, PointView p2,
                                              PointView p3) {
  ShortcutGeometry g{};
  g.len_a = euclid_dist(p0, p1);
  g.len_b = euclid_dist(p1, p2);
  g.len_c = euclid_dist(p2, p3);
  if (g.len_a == 0.0 || g.len_b == 0.0 || g.len_c == 0.0) {
    throw InstanceError("3-shortcut with a zero-length edge");
  }
  g.psi_ba = angle_between(p1, p2, p0).psi;
  g.psi_bc = angle_between(p2, p1, p3).psi;
  g.delta = same_side(p1, p2, p0, p3);
  return g;
}

double three_shortcut_weight_formula(const ShortcutGeometry& g) {
  const double a = g.len_a, b = g.len_b, c = g.len_c;
  return a * a + b * b + c * c + 2 * a * b * std::cos(g.psi_ba) + 2 * b * c * std::cos(g.psi_bc) +
         2 * a * c * std::cos(g.psi_ba + g.delta * g.psi_bc);
}

double three_shortcut_upper_bound(const ShortcutGeometry& g) {
  const double a = g.len_a, b = g.len_b, c = g.len_c;
  return 2 * a * a + b * b + 2 * c * c + 2 * a * b * std::cos(g.psi_ba) +
         2 * b * c * std::cos(g.psi_bc);
}

bool young_inequality_holds(double x, double y, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("Young's inequality needs eps > 0");
  const double rhs = x * x / (2 * eps) + y * y * eps / 2;
  return x * y <= rhs + kBoundTolerance * std::max(1.0, std::abs(rhs));
}

std::vector<EdgeContribution> edge_contributions(const Tour& tour, const Tree& tree,
                                                 const PointSet& points, Alpha a) {
  std::vector<EdgeContribution> out(tree.edge_count());
  for (EdgeId e = 0; e < tree.edge_count(); ++e) out[e] = {e, 0.0, 0.0};
  const std::size_t n = tour.order.size();
  for (std::size_t i = 0; i < tour.legs.size(); ++i) {
    const auto& leg = tour.legs[i];
    const double cost = power_dist(points[tour.order[i]], points[tour.order[(i + 1) % n]], a);
    double total = 0.0;
    for (EdgeId e : leg.edges) total += tree.edge(e).alpha_weight;
    for (EdgeId e : leg.edges) out[e].contrib += cost * tree.edge(e).alpha_weight / total;
  }
  for (auto& c : out) c.ratio = c.contrib / tree.edge(c.edge).alpha_weight;
  return out;
}

double h_function(double x, double k) {
  const double s = std::sin(x / 2);
  return std::pow(2 + std::cos(x), k) + std::pow(2 + s * s, k);
}

GridMaximum h_function_check(double k, std::size_t grid_points) {
  if (k < 1.0) throw std::invalid_argument("h is examined for k >= 1");
  if (grid_points < 2) throw std::invalid_argument("grid needs at least two points");
  GridMaximum best{0.0, h_function(0.0, k)};
  const double step = 2 * std::numbers::pi / static_cast<double>(grid_points - 1);
  for (std::size_t j = 1; j < grid_points; ++j) {
    const double x = step * static_cast<double>(j);
    const double h = h_function(x, k);
    if (h > best.max_value) best = {x, h};
  }
  return best;
}

double RelatedAngles::slack() const { return psi_ba - (std::numbers::pi - psi_ad) / 2; }

std::vector<RelatedAngles> related_angle_pairs(const ShortcutTrace& trace, const Tree& tree,
                                               const PointSet& points) {
  const auto bridges = bridges_by_call(trace);
  std::vector<RelatedAngles> out;
  for (const auto& s : trace) {
    if (s.role != ShortcutRole::Bridge || s.edges.size() != 3) continue;
    const EdgeId b = s.call_edge;
    for (EdgeId a : {s.edges.front(), s.edges.back()}) {
      auto it = bridges.find(a);
      if (it == bridges.end() || it->second->edges.size() != 3) continue;
      const VertexId v = tree.shared_vertex(a, b);
      const EdgeId d = side_at(*it->second, tree, v);
      out.push_back({v, b, a, d, psi_at(tree, points, v, b, a), psi_at(tree, points, v, a, d)});
    }
  }
  return out;
}

std::vector<CaseThree> find_case_three(const ShortcutTrace& trace, const Tree& tree,
                                       const PointSet& points) {
  constexpr double kRightAngle = std::numbers::pi / 2;
  const auto bridges = bridges_by_call(trace);
  auto three_bridge = [&](EdgeId call) -> const TracedShortcut* {
    auto it = bridges.find(call);
    return it != bridges.end() && it->second->edges.size() == 3 ? it->second : nullptr;
  };
  std::vector<CaseThree> out;
  for (const auto& s : trace) {
    if (s.role != ShortcutRole::Bridge || s.edges.size() != 3) continue;
    const TreeEdge& first = tree.edge(s.call_edge);
    for (VertexId v : {first.u, first.v}) {
      CaseThree found{v, {s.call_edge, 0, 0, 0}, {}};
      bool complete = true;
      for (std::size_t j = 0; j < 3 && complete; ++j) {
        const TracedShortcut* bridge = three_bridge(found.chain[j]);
        if (bridge == nullptr) {
          complete = false;
          break;
        }
        found.chain[j + 1] = side_at(*bridge, tree, v);
        found.psi[j] = psi_at(tree, points, v, found.chain[j], found.chain[j + 1]);
        if (!(found.psi[j] < kRightAngle)) complete = false;
      }
      if (complete) out.push_back(found);
    }
  }
  return out;
}

}  // namespace pwtsp
