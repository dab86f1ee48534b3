#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pwtsp/geometry.hpp"
#include "pwtsp/spanning.hpp"

namespace pwtsp {

// How CycleInCube picks the edge e_i at u_i when splitting a subtree.
struct SelectionPolicy {
  enum class Kind {
    Arbitrary,  // smallest neighbor id
    Geometric,  // smallest angle with the current call edge, ties to smaller neighbor id
    Random,     // uniform among candidates, seeded
  };
  Kind kind = Kind::Arbitrary;
  std::uint64_t seed = 0;

  static SelectionPolicy arbitrary() { return {Kind::Arbitrary, 0}; }
  static SelectionPolicy geometric() { return {Kind::Geometric, 0}; }
  static SelectionPolicy random(std::uint64_t seed) { return {Kind::Random, seed}; }
};

// Tree path shortcut by one tour edge, oriented from the tour edge's first
// endpoint to its second. k = edges.size().
struct Leg {
  std::vector<EdgeId> edges;
  std::size_t k() const { return edges.size(); }
};

// Cyclic visiting order; legs[i] joins order[i] and order[(i + 1) % n].
// Tours that are not built from a tree leave legs empty.
struct Tour {
  std::vector<VertexId> order;
  std::vector<Leg> legs;
};

enum class ShortcutRole {
  Bridge,   // the w1w2 edge that stitches the two halves of a call
  Base,     // Pi_i = e_i for a two-vertex component
  Closing,  // the root call edge that closes the cycle
};

struct TracedShortcut {
  std::vector<EdgeId> edges;  // tree edges in path order
  std::size_t depth;          // recursion depth of the generating call, root = 0
  EdgeId call_edge;           // edge e of the generating call
  ShortcutRole role;
  VertexId from;              // endpoints of the shortcut; edges run from -> to
  VertexId to;
};

// Shortcuts in generation order. A call's recursive children emit before
// the call's own bridge.
using ShortcutTrace = std::vector<TracedShortcut>;

struct CycleResult {
  Tour tour;
  ShortcutTrace trace;
};

// Hamiltonian cycle in the cube of `tree` that contains `root_edge`.
// Recursion is unrolled onto an explicit stack, so path-shaped trees of any
// size are fine. The tour order starts at vertex 0 and moves first to its
// smaller-id tour neighbor.
CycleResult cycle_in_cube(const Tree& tree, const PointSet& points, EdgeId root_edge,
                          SelectionPolicy policy);

double tour_cost(const PointSet& points, const std::vector<VertexId>& order, Alpha a);

struct SolveResult {
  Tree tree;
  Tour tour;
  ShortcutTrace trace;
  double cost = 0.0;
  double mst_weight = 0.0;

  double ratio_vs_mst() const { return mst_weight > 0.0 ? cost / mst_weight : 1.0; }
};

// MST followed by CycleInCube from the lexicographically smallest tree edge,
// unless `root_edge` names another MST edge by its endpoints.
SolveResult solve_t3(const PointSet& points, Alpha a, SelectionPolicy policy,
                     std::optional<std::pair<VertexId, VertexId>> root_edge = std::nullopt);

// Classical double-tree heuristic: preorder walk of the MST from vertex 0,
// children in increasing id order, skipping every visited vertex.
SolveResult solve_double_tree_naive(const PointSet& points, Alpha a);

}  // namespace pwtsp

namespace pwtsp {

// Checks that `tour` visits every tree vertex once, that every leg is the
// tree path between its tour endpoints with at most `max_k` edges, and that
// every tree edge is used by exactly two legs. Returns a description of the
// first violation.
std::optional<std::string> find_tour_violation(const Tree& tree, const Tour& tour,
                                               std::size_t max_k);

}  // namespace pwtsp
