#include "pwtsp/tour.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "pwtsp/error.hpp"

namespace pwtsp {

namespace {

constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

// Angles closer than this count as equal for the geometric rule.
constexpr double kAngleTieTolerance = 1e-12;

// A tour edge under construction. Vertices keep at most two link slots, so a
// partial Hamiltonian path is just its two endpoints and reversal is free.
struct Link {
  VertexId a;
  VertexId b;
};

class CubeBuilder {
 public:
  CubeBuilder(const Tree& tree, const PointSet& points, SelectionPolicy policy)
      : tree_(tree),
        points_(points),
        policy_(policy),
        rng_(policy.seed),
        cut_(tree.edge_count(), false),
        live_degree_(tree.vertex_count()),
        slots_(tree.vertex_count(), {kNoEdge, kNoEdge}) {
    for (VertexId v = 0; v < tree.vertex_count(); ++v) live_degree_[v] = tree.degree(v);
  }

  CycleResult run(EdgeId root_edge);

 private:
  struct Side {
    VertexId u = kNoVertex;
    VertexId w = kNoVertex;
    EdgeId e = kNoEdge;
    bool recurse = false;
  };

  struct Frame {
    EdgeId e;
    std::size_t depth;
    int stage;
    std::array<Side, 2> sides;
  };

  void cut(EdgeId e) {
    cut_[e] = true;
    --live_degree_[tree_.edge(e).u];
    --live_degree_[tree_.edge(e).v];
  }

  EdgeId pick(VertexId u, EdgeId call_edge);
  // Classifies the component of u after `call_edge` is cut and, if it has
  // more than one vertex, chooses e_i. Emits the base link for two-vertex
  // components.
  Side plan_side(VertexId u, const Frame& frame);
  void emit(VertexId from, VertexId to, std::vector<EdgeId> edges, const Frame& frame,
            ShortcutRole role);
  Tour stitch() const;

  const Tree& tree_;
  const PointSet& points_;
  SelectionPolicy policy_;
  std::mt19937_64 rng_;
  std::vector<bool> cut_;
  std::vector<std::size_t> live_degree_;
  std::vector<std::array<EdgeId, 2>> slots_;
  std::vector<Link> links_;
  ShortcutTrace trace_;
};

EdgeId CubeBuilder::pick(VertexId u, EdgeId call_edge) {
  std::vector<Incidence> candidates;
  for (const auto& inc : tree_.incident(u)) {
    if (!cut_[inc.edge]) candidates.push_back(inc);
  }
  switch (policy_.kind) {
    case SelectionPolicy::Kind::Arbitrary:
      return candidates.front().edge;
    case SelectionPolicy::Kind::Random:
      return candidates[rng_() % candidates.size()].edge;
    case SelectionPolicy::Kind::Geometric: {
      const VertexId far = tree_.edge(call_edge).other(u);
      EdgeId best = kNoEdge;
      double best_angle = std::numeric_limits<double>::infinity();
      // candidates are sorted by neighbor id, so keeping the first of a tie
      // prefers the smaller id.
      for (const auto& inc : candidates) {
        const double angle = angle_between(points_[u], points_[far], points_[inc.neighbor]).angle;
        if (angle < best_angle - kAngleTieTolerance) {
          best_angle = angle;
          best = inc.edge;
        }
      }
      return best;
    }
  }
  return kNoEdge;
}

CubeBuilder::Side CubeBuilder::plan_side(VertexId u, const Frame& frame) {
  Side side;
  side.u = u;
  if (live_degree_[u] == 0) {
    side.w = u;
    return side;
  }
  side.e = pick(u, frame.e);
  side.w = tree_.edge(side.e).other(u);
  const bool two_vertices = live_degree_[u] == 1 && live_degree_[side.w] == 1;
  if (two_vertices) {
    emit(u, side.w, {side.e}, frame, ShortcutRole::Base);
  } else {
    side.recurse = true;
  }
  return side;
}

void CubeBuilder::emit(VertexId from, VertexId to, std::vector<EdgeId> edges, const Frame& frame,
                       ShortcutRole role) {
  const auto id = static_cast<EdgeId>(links_.size());
  links_.push_back({from, to});
  for (VertexId x : {from, to}) {
    auto& s = slots_[x];
    if (s[0] == kNoEdge) {
      s[0] = id;
    } else if (s[1] == kNoEdge) {
      s[1] = id;
    } else {
      throw std::logic_error("vertex " + std::to_string(x) + " joined to more than two tour edges");
    }
  }
  trace_.push_back({std::move(edges), frame.depth, frame.e, role, from, to});
}

CycleResult CubeBuilder::run(EdgeId root_edge) {
  std::vector<Frame> stack;
  stack.push_back({root_edge, 0, 0, {}});
  while (!stack.empty()) {
    // push_back invalidates f; every branch that pushes continues right after.
    Frame& f = stack.back();
    const TreeEdge& e = tree_.edge(f.e);
    if (f.stage == 0) {
      cut(f.e);
      // Both halves are fixed once e is cut; the recursion inside one half
      // never touches the other.
      f.sides[0] = plan_side(e.u, f);
      f.stage = 1;
      if (f.sides[0].recurse) {
        Frame child{f.sides[0].e, f.depth + 1, 0, {}};
        stack.push_back(child);
      }
      continue;
    }
    if (f.stage == 1) {
      f.sides[1] = plan_side(e.v, f);
      f.stage = 2;
      if (f.sides[1].recurse) {
        Frame child{f.sides[1].e, f.depth + 1, 0, {}};
        stack.push_back(child);
      }
      continue;
    }
    // The path built for side i runs between u_i and w_i, so w1w2 closes
    // the tree path w1 - u1 - u2 - w2.
    std::vector<EdgeId> bridge;
    const auto& [s1, s2] = f.sides;
    if (s1.w != s1.u) bridge.push_back(s1.e);
    bridge.push_back(f.e);
    if (s2.w != s2.u) bridge.push_back(s2.e);
    const Frame done = f;
    stack.pop_back();
    emit(s1.w, s2.w, std::move(bridge), done, ShortcutRole::Bridge);
  }
  const TreeEdge& root = tree_.edge(root_edge);
  emit(root.v, root.u, {root_edge}, Frame{root_edge, 0, 3, {}}, ShortcutRole::Closing);
  return {stitch(), std::move(trace_)};
}

Tour CubeBuilder::stitch() const {
  const std::size_t n = tree_.vertex_count();
  Tour tour;
  tour.order.reserve(n);
  tour.legs.reserve(n);
  auto far_end = [this](EdgeId link, VertexId x) {
    return links_[link].a == x ? links_[link].b : links_[link].a;
  };
  VertexId cur = 0;
  EdgeId via = slots_[0][0];
  if (far_end(slots_[0][1], 0) < far_end(via, 0)) via = slots_[0][1];
  for (std::size_t step = 0; step < n; ++step) {
    tour.order.push_back(cur);
    Leg leg{trace_[via].edges};
    if (links_[via].a != cur) std::reverse(leg.edges.begin(), leg.edges.end());
    tour.legs.push_back(std::move(leg));
    const VertexId next = far_end(via, cur);
    const auto& s = slots_[next];
    via = s[0] == via ? s[1] : s[0];
    cur = next;
  }
  return tour;
}

}  // namespace

CycleResult cycle_in_cube(const Tree& tree, const PointSet& points, EdgeId root_edge,
                          SelectionPolicy policy) {
  if (tree.vertex_count() < 2) throw std::invalid_argument("cycle_in_cube needs at least 2 vertices");
  if (root_edge >= tree.edge_count()) {
    throw std::invalid_argument("edge " + std::to_string(root_edge) + " is not a tree edge");
  }
  if (points.size() != tree.vertex_count()) {
    throw InstanceError("point set and tree disagree on the vertex count");
  }
  return CubeBuilder(tree, points, policy).run(root_edge);
}

double tour_cost(const PointSet& points, const std::vector<VertexId>& order, Alpha a) {
  double cost = 0.0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    cost += power_dist(points[order[i]], points[order[(i + 1) % order.size()]], a);
  }
  return cost;
}

SolveResult solve_t3(const PointSet& points, Alpha a, SelectionPolicy policy,
                     std::optional<std::pair<VertexId, VertexId>> root_edge) {
  SolveResult result;
  result.tree = build_mst(points, a);
  result.mst_weight = result.tree.total_weight();
  const std::size_t n = points.size();
  if (n == 0) return result;
  if (n == 1) {
    result.tour.order = {0};
    return result;
  }
  EdgeId root = 0;
  if (root_edge) {
    const auto [lo, hi] = std::minmax(root_edge->first, root_edge->second);
    const auto& edges = result.tree.edges();
    auto it = std::find_if(edges.begin(), edges.end(),
                           [&](const TreeEdge& e) { return e.u == lo && e.v == hi; });
    if (it == edges.end()) {
      throw std::invalid_argument("(" + std::to_string(lo) + ", " + std::to_string(hi) +
                                  ") is not an MST edge");
    }
    root = static_cast<EdgeId>(it - edges.begin());
  }
  auto cycle = cycle_in_cube(result.tree, points, root, policy);
  result.tour = std::move(cycle.tour);
  result.trace = std::move(cycle.trace);
  result.cost = tour_cost(points, result.tour.order, a);
  return result;
}

SolveResult solve_double_tree_naive(const PointSet& points, Alpha a) {
  SolveResult result;
  result.tree = build_mst(points, a);
  result.mst_weight = result.tree.total_weight();
  const std::size_t n = points.size();
  if (n == 0) return result;

  const Tree& tree = result.tree;
  std::vector<bool> seen(n, false);
  // (vertex, edge to parent, next adjacency index)
  struct Visit {
    VertexId v;
    EdgeId up;
    std::size_t next;
  };
  std::vector<Visit> stack{{0, kNoEdge, 0}};
  std::vector<EdgeId> pending;
  seen[0] = true;
  result.tour.order.push_back(0);
  while (!stack.empty()) {
    Visit& top = stack.back();
    const auto& adj = tree.incident(top.v);
    if (top.next < adj.size()) {
      const Incidence inc = adj[top.next++];
      if (seen[inc.neighbor]) continue;
      seen[inc.neighbor] = true;
      pending.push_back(inc.edge);
      result.tour.legs.push_back({pending});
      pending.clear();
      result.tour.order.push_back(inc.neighbor);
      stack.push_back({inc.neighbor, inc.edge, 0});
    } else {
      if (top.up != kNoEdge) pending.push_back(top.up);
      stack.pop_back();
    }
  }
  if (n > 1) result.tour.legs.push_back({pending});
  result.cost = tour_cost(points, result.tour.order, a);
  return result;
}

}  // namespace pwtsp

namespace pwtsp {

std::optional<std::string> find_tour_violation(const Tree& tree, const Tour& tour,
                                               std::size_t max_k) {
  const std::size_t n = tree.vertex_count();
  if (tour.order.size() != n) return "tour has " + std::to_string(tour.order.size()) + " stops for " +
                                     std::to_string(n) + " vertices";
  std::vector<bool> seen(n, false);
  for (VertexId v : tour.order) {
    if (v >= n || seen[v]) return "order is not a permutation (vertex " + std::to_string(v) + ")";
    seen[v] = true;
  }
  if (n < 2) return std::nullopt;
  if (tour.legs.size() != n) return "expected one leg per tour edge";
  std::vector<int> uses(tree.edge_count(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& leg = tour.legs[i];
    if (leg.k() < 1 || leg.k() > max_k) {
      return "leg " + std::to_string(i) + " uses " + std::to_string(leg.k()) + " tree edges";
    }
    VertexId at = tour.order[i];
    for (std::size_t s = 0; s < leg.edges.size(); ++s) {
      const EdgeId e = leg.edges[s];
      if (std::find(leg.edges.begin(), leg.edges.begin() + s, e) != leg.edges.begin() + s) {
        return "leg " + std::to_string(i) + " walks a tree edge twice";
      }
      if (e >= tree.edge_count() || !tree.edge(e).touches(at)) {
        return "leg " + std::to_string(i) + " is not a tree path";
      }
      at = tree.edge(e).other(at);
      ++uses[e];
    }
    if (at != tour.order[(i + 1) % n]) return "leg " + std::to_string(i) + " ends at the wrong vertex";
  }
  for (EdgeId e = 0; e < uses.size(); ++e) {
    if (uses[e] != 2) {
      return "tree edge " + std::to_string(e) + " used " + std::to_string(uses[e]) + " times";
    }
  }
  return std::nullopt;
}

}  // namespace pwtsp
