#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "pwtsp/geometry.hpp"
#include "pwtsp/spanning.hpp"

namespace pwtsp {

// n distinct points uniform in [0,1)^d. Identical for identical seeds on
// every platform (53-bit mantissas drawn straight from mt19937_64).
PointSet gen_random(std::size_t n, std::size_t d, std::uint64_t seed);

// (i * spacing, 0) for i = 0..n-1.
PointSet gen_collinear_chain(std::size_t n, double spacing);

// Integer points (c, r), row-major.
PointSet gen_grid(std::size_t rows, std::size_t cols);

// ---------------------------------------------------------------------------
// Gadget embedding a {1,2}-TSP instance on K_n into a 3-D point set.
//
// Vertices v_1..v_n; edges e_1..e_m in lexicographic (i, j) order with i < j.
// Every vertex owns a vertical spine, every edge two horizontal bones
// separated by a gap whose squared length equals the edge weight.
// ---------------------------------------------------------------------------

inline constexpr std::size_t kGadgetMaxCities = 1'000'000;

struct GadgetSpec {
  std::size_t n = 0;
  std::vector<int> weights;  // weights[k - 1] = w(e_k) in {1, 2}
  std::size_t density = 1;   // cities per unit length

  static GadgetSpec uniform(std::size_t n, int weight, std::size_t density);
  // Throws std::invalid_argument when n < 3, density < 1, weights has the
  // wrong length or holds anything but 1 and 2.
  void validate() const;
};

std::size_t gadget_edge_count(std::size_t n);
// 1-based endpoints (i, j), i < j, of the 1-based edge k.
std::pair<std::size_t, std::size_t> gadget_edge_endpoints(std::size_t n, std::size_t k);

struct GadgetSegment {
  enum class Kind { Spine, FirstBone, SecondBone };
  Kind kind;
  std::size_t cluster;  // 0-based source vertex owning the segment
  std::size_t edge;     // 1-based source edge, 0 for spines
  Point from;
  Point to;

  double length() const { return euclid_dist(from, to); }
};

struct GadgetGap {
  std::size_t edge;     // 1-based k
  std::size_t cluster_i;
  std::size_t cluster_j;
  VertexId city_i;      // end of the first bone (cluster of v_i)
  VertexId city_j;      // end of the second bone (cluster of v_j)
  double delta;         // measured |city_i city_j|
  int weight;
};

struct GadgetInstance {
  std::size_t n = 0;
  std::size_t density = 1;
  PointSet points;
  std::vector<std::size_t> cluster;                  // per city
  std::vector<GadgetGap> gaps;                       // gaps[k - 1]
  std::vector<GadgetSegment> segments;
  std::vector<std::pair<VertexId, VertexId>> steps;  // adjacent cities along segments

  double total_length() const;
  // Cost of walking every step twice, i.e. visiting every city of every
  // cluster twice.
  double double_traversal_cost(Alpha a) const;
};

// Throws std::length_error when the instance would exceed kGadgetMaxCities.
GadgetInstance build_gadget(const GadgetSpec& spec);

struct GadgetCorrespondence {
  double source_opt = 0.0;                 // exact {1,2}-TSP optimum on K_n
  std::vector<std::size_t> source_tour;    // 0-based vertices of an optimal tour
  double gadget_cost = 0.0;                // alpha = 2 cost of the walk below
  double jump_cost = 0.0;                  // part of gadget_cost spent crossing gaps
  double slack_bound = 0.0;                // 4 * total_length / density
  std::vector<VertexId> walk;              // closed walk through every city
};

// Follows an optimal source tour through the clusters: inside each cluster a
// depth-first walk from the entry gap city to the exit gap city, between
// clusters one jump across the gap of the source edge. n <= 10.
GadgetCorrespondence gadget_cost_correspondence(const GadgetSpec& spec);

}  // namespace pwtsp
