#include "pwtsp/exact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

#include "pwtsp/error.hpp"

namespace pwtsp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_range(std::size_t n, std::size_t max, const char* what) {
  if (n < 2 || n > max) {
    throw OracleSizeError(std::string(what) + " handles 2.." + std::to_string(max) +
                          " cities, got " + std::to_string(n));
  }
}

}  // namespace

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  if (values_.size() != n_ * n_) throw std::invalid_argument("distance matrix must be n x n");
  for (std::size_t i = 0; i < n_; ++i) {
    if ((*this)(i, i) != 0.0) throw std::invalid_argument("distance matrix diagonal must be zero");
    for (std::size_t j = 0; j < n_; ++j) {
      const double d = (*this)(i, j);
      if (!std::isfinite(d) || d < 0.0) throw std::invalid_argument("distances must be finite and >= 0");
      if (d != (*this)(j, i)) throw std::invalid_argument("distance matrix must be symmetric");
    }
  }
}

DistanceMatrix DistanceMatrix::from_points(const PointSet& points, Alpha a) {
  const std::size_t n = points.size();
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      v[i * n + j] = v[j * n + i] = power_dist(points[i], points[j], a);
    }
  }
  return DistanceMatrix(n, std::move(v));
}

ExactTour held_karp(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  require_range(n, kHeldKarpMaxCities, "held_karp");
  // Subsets of {1..n-1}; vertex j+1 is bit j.
  const std::size_t m = n - 1;
  const std::size_t full = std::size_t{1} << m;
  std::vector<double> dp(full * m, kInf);
  std::vector<std::uint8_t> from(full * m, 0);
  for (std::size_t j = 0; j < m; ++j) dp[(std::size_t{1} << j) * m + j] = d(0, j + 1);

  for (std::size_t mask = 1; mask < full; ++mask) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!(mask >> j & 1)) continue;
      const double base = dp[mask * m + j];
      if (base == kInf) continue;
      for (std::size_t k = 0; k < m; ++k) {
        if (mask >> k & 1) continue;
        const std::size_t next = (mask | std::size_t{1} << k) * m + k;
        const double cand = base + d(j + 1, k + 1);
        if (cand < dp[next]) {
          dp[next] = cand;
          from[next] = static_cast<std::uint8_t>(j);
        }
      }
    }
  }

  ExactTour out{kInf, {}};
  std::size_t last = 0;
  for (std::size_t j = 0; j < m; ++j) {
    const double cand = dp[(full - 1) * m + j] + d(j + 1, 0);
    if (cand < out.cost) {
      out.cost = cand;
      last = j;
    }
  }
  std::vector<VertexId> rev;
  std::size_t mask = full - 1;
  std::size_t j = last;
  while (true) {
    rev.push_back(static_cast<VertexId>(j + 1));
    const std::size_t prev_mask = mask & ~(std::size_t{1} << j);
    if (prev_mask == 0) break;
    j = from[mask * m + j];
    mask = prev_mask;
  }
  out.order.push_back(0);
  out.order.insert(out.order.end(), rev.rbegin(), rev.rend());
  if (out.order.size() > 2 && out.order[1] > out.order.back()) {
    std::reverse(out.order.begin() + 1, out.order.end());
  }
  return out;
}

double brute_force_permutations(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  require_range(n, kBruteForceMaxCities, "brute_force_permutations");
  std::vector<std::size_t> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  double best = kInf;
  do {
    double cost = d(0, rest.front()) + d(rest.back(), 0);
    for (std::size_t i = 0; i + 1 < rest.size(); ++i) cost += d(rest[i], rest[i + 1]);
    best = std::min(best, cost);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

MetricClosure::MetricClosure(const WeightedGraph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<double> all(n * n, kInf);
  predecessor_.assign(n, std::vector<VertexId>(n, std::numeric_limits<VertexId>::max()));
  using Item = std::pair<double, VertexId>;
  for (VertexId s = 0; s < n; ++s) {
    double* dist = all.data() + s * n;
    auto& pred = predecessor_[s];
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist[s] = 0.0;
    pred[s] = s;
    queue.emplace(0.0, s);
    while (!queue.empty()) {
      const auto [du, u] = queue.top();
      queue.pop();
      if (du > dist[u]) continue;
      for (const auto& [v, w] : graph.neighbors(u)) {
        if (du + w < dist[v]) {
          dist[v] = du + w;
          pred[v] = u;
          queue.emplace(dist[v], v);
        }
      }
    }
  }
  for (std::size_t i = 0; i < n * n; ++i) {
    if (all[i] == kInf) throw std::invalid_argument("metric closure of a disconnected graph");
  }
  // Shortest-path sums can differ in the last bit between the two
  // directions; keep the matrix exactly symmetric.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) all[j * n + i] = all[i * n + j];
  }
  distances_ = DistanceMatrix(n, std::move(all));
}

std::vector<VertexId> MetricClosure::path(VertexId source, VertexId target) const {
  std::vector<VertexId> out{target};
  for (VertexId v = target; v != source;) {
    v = predecessor_[source][v];
    out.push_back(v);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

RevTspResult rev_tsp_exact(const PointSet& points, Alpha a, ClosureBase base) {
  const std::size_t n = points.size();
  RevTspResult out;
  if (base == ClosureBase::Auto) {
    base = points.dim() == 2 && a.value() >= 2.0 ? ClosureBase::Gabriel : ClosureBase::Complete;
  }
  if (base == ClosureBase::Gabriel && a.value() < 2.0) {
    throw std::invalid_argument("the Gabriel closure is exact only for alpha >= 2");
  }
  out.base = base;
  if (n <= 1) {
    if (n == 1) out.walk = {0};
    out.revisit.assign(out.walk.size(), false);
    return out;
  }
  require_range(n, kHeldKarpMaxCities, "rev_tsp_exact");
  const WeightedGraph graph =
      base == ClosureBase::Gabriel ? build_gabriel(points, a) : complete_power_graph(points, a);
  const MetricClosure closure(graph);
  const ExactTour tour = held_karp(closure.distances());
  out.cost = tour.cost;
  for (std::size_t i = 0; i < n; ++i) {
    const auto leg = closure.path(tour.order[i], tour.order[(i + 1) % n]);
    out.walk.insert(out.walk.end(), leg.begin(), leg.end() - 1);
  }
  std::vector<std::size_t> seen(n, 0);
  for (VertexId v : out.walk) ++seen[v];
  for (VertexId v : out.walk) out.revisit.push_back(seen[v] > 1);
  return out;
}

}  // namespace pwtsp
