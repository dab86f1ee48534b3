#include "pwtsp/instances.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "pwtsp/exact.hpp"

namespace pwtsp {

PointSet gen_random(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (d == 0) throw std::invalid_argument("dimension must be at least 1");
  std::mt19937_64 rng(seed);
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::set<std::vector<double>> seen;
  std::vector<double> flat;
  flat.reserve(n * d);
  while (seen.size() < n) {
    std::vector<double> p(d);
    for (auto& c : p) c = unit();
    if (seen.insert(p).second) flat.insert(flat.end(), p.begin(), p.end());
  }
  return PointSet(d, std::move(flat));
}

PointSet gen_collinear_chain(std::size_t n, double spacing) {
  if (!(spacing > 0.0) || !std::isfinite(spacing)) throw std::invalid_argument("spacing must be positive");
  std::vector<double> flat;
  flat.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    flat.push_back(static_cast<double>(i) * spacing);
    flat.push_back(0.0);
  }
  return PointSet(2, std::move(flat));
}

PointSet gen_grid(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("grid needs at least one row and column");
  std::vector<double> flat;
  flat.reserve(2 * rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      flat.push_back(static_cast<double>(c));
      flat.push_back(static_cast<double>(r));
    }
  }
  return PointSet(2, std::move(flat));
}

GadgetSpec GadgetSpec::uniform(std::size_t n, int weight, std::size_t density) {
  return {n, std::vector<int>(gadget_edge_count(n), weight), density};
}

void GadgetSpec::validate() const {
  if (n < 3) throw std::invalid_argument("gadget needs n >= 3");
  if (density < 1) throw std::invalid_argument("gadget density must be >= 1");
  if (weights.size() != gadget_edge_count(n)) {
    throw std::invalid_argument("gadget needs " + std::to_string(gadget_edge_count(n)) +
                                " edge weights, got " + std::to_string(weights.size()));
  }
  for (int w : weights) {
    if (w != 1 && w != 2) throw std::invalid_argument("gadget weights must be 1 or 2");
  }
}

std::size_t gadget_edge_count(std::size_t n) { return n * (n - 1) / 2; }

std::pair<std::size_t, std::size_t> gadget_edge_endpoints(std::size_t n, std::size_t k) {
  std::size_t idx = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j, ++idx) {
      if (idx == k) return {i, j};
    }
  }
  throw std::out_of_range("edge index " + std::to_string(k) + " out of range");
}

double GadgetInstance::total_length() const {
  double sum = 0.0;
  for (const auto& s : segments) sum += s.length();
  return sum;
}

double GadgetInstance::double_traversal_cost(Alpha a) const {
  double sum = 0.0;
  for (const auto& [x, y] : steps) sum += power_dist(points[x], points[y], a);
  return 2.0 * sum;
}

namespace {

double gap_width(int weight) { return weight == 1 ? 1.0 : std::sqrt(2.0); }

// Number of equal intervals a segment of this length is cut into.
std::size_t intervals(double length, std::size_t density) {
  return static_cast<std::size_t>(std::ceil(length * static_cast<double>(density) - 1e-9));
}

class GadgetBuilder {
 public:
  explicit GadgetBuilder(const GadgetSpec& spec) : spec_(spec) {}

  GadgetInstance build();

 private:
  VertexId add_city(const std::array<double, 3>& p, std::size_t cluster) {
    coords_.insert(coords_.end(), p.begin(), p.end());
    out_.cluster.push_back(cluster);
    return static_cast<VertexId>(out_.cluster.size() - 1);
  }
  // Cities strictly after `start` up to and including `to`; returns the last.
  VertexId add_bone(VertexId start, const std::array<double, 3>& from, const std::array<double, 3>& to,
                    std::size_t cluster);

  const GadgetSpec& spec_;
  GadgetInstance out_;
  std::vector<double> coords_;
};

VertexId GadgetBuilder::add_bone(VertexId start, const std::array<double, 3>& from,
                                 const std::array<double, 3>& to, std::size_t cluster) {
  const double len = std::hypot(to[0] - from[0], to[1] - from[1], to[2] - from[2]);
  const std::size_t steps = intervals(len, spec_.density);
  VertexId prev = start;
  for (std::size_t t = 1; t <= steps; ++t) {
    const double f = static_cast<double>(t) / static_cast<double>(steps);
    std::array<double, 3> p;
    for (int c = 0; c < 3; ++c) p[c] = t == steps ? to[c] : from[c] + (to[c] - from[c]) * f;
    const VertexId city = add_city(p, cluster);
    out_.steps.emplace_back(prev, city);
    prev = city;
  }
  return prev;
}

GadgetInstance GadgetBuilder::build() {
  const std::size_t n = spec_.n;
  const std::size_t m = gadget_edge_count(n);
  const auto dn = static_cast<double>(n);
  const auto density = static_cast<double>(spec_.density);
  out_.n = n;
  out_.density = spec_.density;

  // Size guard before allocating anything.
  double estimate = dn * (intervals(dn * static_cast<double>(m - 1), spec_.density) + 1.0);
  for (std::size_t k = 1; k <= m; ++k) {
    const auto [i, j] = gadget_edge_endpoints(n, k);
    estimate += 2.0 * dn * static_cast<double>(j - i) * density + 1.0;
  }
  if (estimate > static_cast<double>(kGadgetMaxCities)) {
    throw std::length_error("gadget would hold about " + std::to_string(static_cast<long>(estimate)) +
                            " cities, above the limit of " + std::to_string(kGadgetMaxCities));
  }

  // Spines: (ni, ni, n) .. (ni, ni, nm); spine_city(i, z-index) for bone roots.
  const std::size_t spine_steps = intervals(dn * static_cast<double>(m - 1), spec_.density);
  std::vector<VertexId> spine_start(n);
  for (std::size_t c = 0; c < n; ++c) {
    const double x = dn * static_cast<double>(c + 1);
    out_.segments.push_back({GadgetSegment::Kind::Spine, c, 0, Point{x, x, dn},
                             Point{x, x, dn * static_cast<double>(m)}});
    spine_start[c] = static_cast<VertexId>(out_.cluster.size());
    for (std::size_t t = 0; t <= spine_steps; ++t) {
      const double z = dn + dn * static_cast<double>(m - 1) * static_cast<double>(t) /
                                static_cast<double>(spine_steps);
      const VertexId city = add_city({x, x, t == spine_steps ? dn * static_cast<double>(m) : z}, c);
      if (t > 0) out_.steps.emplace_back(city - 1, city);
    }
  }
  // The bone of e_k leaves its spine at height nk, which is spine step
  // n(k-1) * density because the spine starts at height n.
  auto spine_city = [&](std::size_t c, std::size_t k) {
    return spine_start[c] + static_cast<VertexId>(n * (k - 1) * spec_.density);
  };

  for (std::size_t k = 1; k <= m; ++k) {
    const auto [i, j] = gadget_edge_endpoints(n, k);
    const int w = spec_.weights[k - 1];
    const double delta = gap_width(w);
    const double ni = dn * static_cast<double>(i);
    const double nj = dn * static_cast<double>(j);
    const double nk = dn * static_cast<double>(k);
    // First bone (nj, ni, nk) <- (ni, ni, nk); second bone from (nj, nj, nk)
    // stops delta short of the first bone's end.
    const std::array<double, 3> first_from{ni, ni, nk}, first_to{nj, ni, nk};
    const std::array<double, 3> second_from{nj, nj, nk}, second_to{nj, ni + delta, nk};
    out_.segments.push_back({GadgetSegment::Kind::FirstBone, i - 1, k,
                             Point{first_from[0], first_from[1], first_from[2]},
                             Point{first_to[0], first_to[1], first_to[2]}});
    out_.segments.push_back({GadgetSegment::Kind::SecondBone, j - 1, k,
                             Point{second_from[0], second_from[1], second_from[2]},
                             Point{second_to[0], second_to[1], second_to[2]}});
    const VertexId end_i = add_bone(spine_city(i - 1, k), first_from, first_to, i - 1);
    const VertexId end_j = add_bone(spine_city(j - 1, k), second_from, second_to, j - 1);
    out_.gaps.push_back({k, i - 1, j - 1, end_i, end_j, 0.0, w});
  }
  out_.points = PointSet(3, std::move(coords_));
  for (auto& g : out_.gaps) g.delta = euclid_dist(out_.points[g.city_i], out_.points[g.city_j]);
  return std::move(out_);
}

// Walk inside one cluster tree from `entry` to `exit` that visits every city
// and walks each step at most twice.
class ClusterWalker {
 public:
  explicit ClusterWalker(const GadgetInstance& g) : adjacency_(g.points.size()) {
    for (const auto& [x, y] : g.steps) {
      adjacency_[x].push_back(y);
      adjacency_[y].push_back(x);
    }
  }

  void walk(VertexId entry, VertexId exit, std::vector<VertexId>& out) const;

 private:
  void excursion(VertexId root, VertexId child, std::vector<VertexId>& out) const;

  std::vector<std::vector<VertexId>> adjacency_;
};

void ClusterWalker::excursion(VertexId root, VertexId child, std::vector<VertexId>& out) const {
  struct Visit {
    VertexId v;
    VertexId parent;
    std::size_t next;
  };
  std::vector<Visit> stack{{child, root, 0}};
  out.push_back(child);
  while (!stack.empty()) {
    Visit& top = stack.back();
    const auto& adj = adjacency_[top.v];
    if (top.next < adj.size()) {
      const VertexId nb = adj[top.next++];
      if (nb == top.parent) continue;
      out.push_back(nb);
      stack.push_back({nb, top.v, 0});
    } else {
      out.push_back(top.parent);
      stack.pop_back();
    }
  }
}

void ClusterWalker::walk(VertexId entry, VertexId exit, std::vector<VertexId>& out) const {
  // Tree path entry .. exit via BFS parents.
  std::vector<VertexId> parent(adjacency_.size(), std::numeric_limits<VertexId>::max());
  std::vector<VertexId> queue{entry};
  parent[entry] = entry;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (VertexId nb : adjacency_[queue[head]]) {
      if (parent[nb] == std::numeric_limits<VertexId>::max()) {
        parent[nb] = queue[head];
        queue.push_back(nb);
      }
    }
  }
  if (parent[exit] == std::numeric_limits<VertexId>::max()) {
    throw std::logic_error("gadget cluster is not connected");
  }
  std::vector<VertexId> path{exit};
  while (path.back() != entry) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());

  for (std::size_t t = 0; t < path.size(); ++t) {
    const VertexId v = path[t];
    out.push_back(v);
    for (VertexId nb : adjacency_[v]) {
      const bool on_path = (t > 0 && nb == path[t - 1]) || (t + 1 < path.size() && nb == path[t + 1]);
      if (!on_path) excursion(v, nb, out);
    }
  }
}

}  // namespace

GadgetInstance build_gadget(const GadgetSpec& spec) {
  spec.validate();
  return GadgetBuilder(spec).build();
}

GadgetCorrespondence gadget_cost_correspondence(const GadgetSpec& spec) {
  spec.validate();
  if (spec.n > kBruteForceMaxCities) {
    throw std::invalid_argument("source optimum is brute-forced; n must be <= " +
                                std::to_string(kBruteForceMaxCities));
  }
  const std::size_t n = spec.n;
  std::vector<double> w(n * n, 0.0);
  for (std::size_t k = 1; k <= gadget_edge_count(n); ++k) {
    const auto [i, j] = gadget_edge_endpoints(n, k);
    w[(i - 1) * n + (j - 1)] = w[(j - 1) * n + (i - 1)] = spec.weights[k - 1];
  }
  const DistanceMatrix source(n, std::move(w));

  GadgetCorrespondence out;
  out.source_opt = brute_force_permutations(source);
  const ExactTour tour = held_karp(source);
  out.source_tour.assign(tour.order.begin(), tour.order.end());

  const GadgetInstance g = build_gadget(spec);
  // Gap city owned by cluster c on the gap of source edge {c, other}.
  auto gap_city = [&](std::size_t c, std::size_t other) {
    const auto lo = std::min(c, other), hi = std::max(c, other);
    for (const auto& gap : g.gaps) {
      if (gap.cluster_i == lo && gap.cluster_j == hi) return c == lo ? gap.city_i : gap.city_j;
    }
    throw std::logic_error("missing gap");
  };
  const ClusterWalker walker(g);
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t c = out.source_tour[t];
    const std::size_t prev = out.source_tour[(t + n - 1) % n];
    const std::size_t next = out.source_tour[(t + 1) % n];
    walker.walk(gap_city(c, prev), gap_city(c, next), out.walk);
  }
  const Alpha two(2.0);
  for (std::size_t s = 0; s < out.walk.size(); ++s) {
    const VertexId x = out.walk[s];
    const VertexId y = out.walk[(s + 1) % out.walk.size()];
    const double cost = power_dist(g.points[x], g.points[y], two);
    out.gadget_cost += cost;
    if (g.cluster[x] != g.cluster[y]) out.jump_cost += cost;
  }
  out.slack_bound = 4.0 * g.total_length() / static_cast<double>(spec.density);
  return out;
}

}  // namespace pwtsp
