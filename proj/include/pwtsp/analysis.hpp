#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "pwtsp/geometry.hpp"
#include "pwtsp/spanning.hpp"
#include "pwtsp/tour.hpp"

namespace pwtsp {

// k^(alpha-1) * sum |e_i|^alpha, the ceiling on a k-shortcut over edges
// e_1..e_k. Requires alpha >= 1 and k >= 1.
double k_shortcut_bound(std::span<const double> edge_lengths, Alpha a);

// tau such that |.|^alpha satisfies d(p,r) <= tau (d(p,q) + d(q,r)).
double relaxed_triangle_tau(Alpha a);

// Three consecutive tree edges a, b, c of a 3-shortcut.
struct ShortcutGeometry {
  double len_a;
  double len_b;
  double len_c;
  double psi_ba;  // at the vertex shared by a and b
  double psi_bc;  // at the vertex shared by b and c
  int delta;      // +1 when a and c lie on the same side of the line through b

  // Geometry of the chain p0 - p1 - p2 - p3 with a = p0p1, b = p1p2, c = p2p3.
  static ShortcutGeometry from_chain(PointView p0, PointView p1, PointView p2, PointView p3);
};

// Squared length of the 3-shortcut expressed through edge lengths and angles.
double three_shortcut_weight_formula(const ShortcutGeometry& g);
// 2|a|^2 + |b|^2 + 2|c|^2 + 2|a||b| cos psi_ba + 2|b||c| cos psi_bc.
double three_shortcut_upper_bound(const ShortcutGeometry& g);

// xy <= x^2 / (2 eps) + y^2 eps / 2, with relative slack.
bool young_inequality_holds(double x, double y, double eps);

struct EdgeContribution {
  EdgeId edge;
  double contrib;
  double ratio;  // contrib / |edge|^alpha
};

// Splits every leg's cost over its tree edges in proportion to
// k^(alpha-1) |e_i|^alpha (the per-edge terms of the k-shortcut bound), so
// the contributions sum to the tour cost.
std::vector<EdgeContribution> edge_contributions(const Tour& tour, const Tree& tree,
                                                 const PointSet& points, Alpha a);

// h(x) = (2 + cos x)^k + (2 + sin^2(x/2))^k
double h_function(double x, double k);

struct GridMaximum {
  double argmax;
  double max_value;
};

// Evaluates h on `grid_points` uniformly spaced samples of [0, 2 pi]
// (endpoints included) and returns the first sample attaining the maximum.
GridMaximum h_function_check(double k, std::size_t grid_points);

// One pair of 3-shortcuts s(a,b,c), s(e,a,d) generated by consecutive calls
// on b and then a, with d incident to the vertex v shared by a and b.
struct RelatedAngles {
  VertexId v;
  EdgeId b;
  EdgeId a;
  EdgeId d;
  double psi_ba;
  double psi_ad;
  // psi_ba - (pi - psi_ad) / 2; non-negative under the geometric rule
  double slack() const;
};

std::vector<RelatedAngles> related_angle_pairs(const ShortcutTrace& trace, const Tree& tree,
                                               const PointSet& points);

// Three consecutive calls c1 -> c2 -> c3 through one vertex v whose bridges
// are all 3-shortcuts, with every psi(c_j, c_{j+1}) at v below pi/2.
struct CaseThree {
  VertexId v;
  std::array<EdgeId, 4> chain;
  std::array<double, 3> psi;
};

std::vector<CaseThree> find_case_three(const ShortcutTrace& trace, const Tree& tree,
                                       const PointSet& points);

}  // namespace pwtsp
