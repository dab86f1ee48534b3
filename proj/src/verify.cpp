#include "pwtsp/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pwtsp/analysis.hpp"
#include "pwtsp/exact.hpp"
#include "pwtsp/gabriel.hpp"
#include "pwtsp/instances.hpp"
#include "pwtsp/spanning.hpp"
#include "pwtsp/tour.hpp"

namespace pwtsp {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Per-trial context handed to a property.
struct Trial {
  std::size_t index;
  std::uint64_t seed;
  std::mt19937_64 rng;
  std::size_t checks = 0;

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  }
  std::size_t pick(std::size_t lo, std::size_t hi) { return lo + rng() % (hi - lo + 1); }
};

struct Failure {
  std::string detail;
  std::optional<InstanceFile> instance;
};

using Check = std::function<std::optional<Failure>(Trial&)>;

struct Property {
  const char* suite;
  const char* name;
  Check check;
};

bool within(double value, double bound) { return value <= bound + kBoundTolerance * std::abs(bound); }

InstanceFile as_file(const PointSet& points, double alpha, const Trial& t) {
  InstanceFile f;
  f.points = points;
  f.alpha = alpha;
  f.meta = {{"trial", t.index}, {"seed", t.seed}};
  return f;
}

std::string describe(double value, double bound) {
  std::ostringstream out;
  out.precision(17);
  out << value << " exceeds " << bound;
  return out.str();
}

Point random_point(Trial& t, std::size_t dim) {
  std::vector<double> c(dim);
  for (auto& x : c) x = t.uniform(-1.0, 1.0);
  return Point(std::move(c));
}

// ---------------------------------------------------------------- lemmas

std::optional<Failure> relaxed_triangle(Trial& t) {
  for (double alpha : {1.1, 1.5, 2.0, 3.0, 4.0}) {
    const Alpha a(alpha);
    const std::size_t dim = t.pick(1, 3);
    const Point p = random_point(t, dim), q = random_point(t, dim), r = random_point(t, dim);
    const double lhs = power_dist(p, r, a);
    const double rhs = relaxed_triangle_tau(a) * (power_dist(p, q, a) + power_dist(q, r, a));
    ++t.checks;
    if (!within(lhs, rhs)) return Failure{"alpha " + std::to_string(alpha) + ": " + describe(lhs, rhs), {}};
  }
  return std::nullopt;
}

std::optional<Failure> k_shortcut(Trial& t) {
  for (double alpha : {1.0, 1.5, 2.0, 3.0}) {
    const std::size_t k = t.pick(1, 3);
    std::vector<Point> chain{random_point(t, 2)};
    std::vector<double> lengths;
    for (std::size_t i = 0; i < k; ++i) {
      chain.push_back(random_point(t, 2));
      lengths.push_back(euclid_dist(chain[i], chain[i + 1]));
    }
    const double actual = power_dist(chain.front(), chain.back(), Alpha(alpha));
    const double bound = k_shortcut_bound(lengths, Alpha(alpha));
    ++t.checks;
    if (!within(actual, bound)) return Failure{describe(actual, bound), {}};
  }
  return std::nullopt;
}

std::optional<Failure> three_shortcut(Trial& t) {
  const Point p0 = random_point(t, 2), p1 = random_point(t, 2), p2 = random_point(t, 2),
              p3 = random_point(t, 2);
  const auto g = ShortcutGeometry::from_chain(p0, p1, p2, p3);
  const double direct = squared_dist(p0, p3);
  const double formula = three_shortcut_weight_formula(g);
  const double bound = three_shortcut_upper_bound(g);
  const double scale = std::pow(g.len_a + g.len_b + g.len_c, 2);
  t.checks += 2;
  if (std::abs(formula - direct) > kBoundTolerance * scale) {
    return Failure{"formula " + std::to_string(formula) + " vs direct " + std::to_string(direct), {}};
  }
  if (formula > bound + kBoundTolerance * scale) return Failure{describe(formula, bound), {}};
  return std::nullopt;
}

std::optional<Failure> young(Trial& t) {
  const double x = t.uniform(-10, 10), y = t.uniform(-10, 10), eps = t.uniform(1e-3, 10);
  ++t.checks;
  if (!young_inequality_holds(x, y, eps)) return Failure{"x=" + std::to_string(x) + " y=" + std::to_string(y), {}};
  return std::nullopt;
}

std::optional<Failure> two_leg(Trial& t) {
  for (double alpha : {2.0, 2.5, 3.0, 4.0}) {
    // r at the origin, q turned at least pi/2 away from p.
    const double phi = t.uniform(0, 2 * std::numbers::pi);
    const double turn = t.uniform(std::numbers::pi / 2, std::numbers::pi);
    const double rp = t.uniform(0.01, 1), rq = t.uniform(0.01, 1);
    const Point r{0.0, 0.0};
    const Point p{rp * std::cos(phi), rp * std::sin(phi)};
    const Point q{rq * std::cos(phi + turn), rq * std::sin(phi + turn)};
    ++t.checks;
    if (!two_leg_replacement_check(p, r, q, Alpha(alpha))) {
      return Failure{"two-leg replacement fails at alpha " + std::to_string(alpha), {}};
    }
  }
  return std::nullopt;
}

std::optional<Failure> h_maximum(Trial& t) {
  const double k = 1.0 + 0.5 * static_cast<double>(t.index % 15);
  const auto best = h_function_check(k, 10'000);
  ++t.checks;
  if (best.argmax != 0.0) return Failure{"k=" + std::to_string(k) + " argmax " + std::to_string(best.argmax), {}};
  return std::nullopt;
}

// ---------------------------------------------------------------- bounds

double alpha_bound(double alpha) { return std::pow(3.0, alpha - 1) + std::pow(std::sqrt(6.0), alpha) / 3; }

std::optional<Failure> t3_runs(Trial& t) {
  const std::size_t n = t.pick(3, 64);
  const PointSet pts = gen_random(n, 2, t.seed);
  for (double alpha : {1.0, 2.0, 2.5, 3.0, 4.0}) {
    const Alpha a(alpha);
    for (auto policy : {SelectionPolicy::arbitrary(), SelectionPolicy::geometric(),
                        SelectionPolicy::random(t.seed ^ 0x5eed)}) {
      const auto run = solve_t3(pts, a, policy);
      const bool geometric = policy.kind == SelectionPolicy::Kind::Geometric;
      auto fail = [&](const std::string& what) {
        return Failure{what + " (alpha " + std::to_string(alpha) + ", policy " +
                           std::to_string(static_cast<int>(policy.kind)) + ")",
                       as_file(pts, alpha, t)};
      };
      ++t.checks;
      if (auto bad = find_tour_violation(run.tree, run.tour, 3)) return fail(*bad);
      for (std::size_t i = 0; i < run.tour.legs.size(); ++i) {
        std::vector<double> lengths;
        for (EdgeId e : run.tour.legs[i].edges) lengths.push_back(run.tree.edge(e).euclid_len);
        const double leg = power_dist(pts[run.tour.order[i]], pts[run.tour.order[(i + 1) % n]], a);
        ++t.checks;
        if (!within(leg, k_shortcut_bound(lengths, a))) return fail("k-shortcut bound on leg " + std::to_string(i));
      }
      if (alpha <= 3.0) {
        ++t.checks;
        const double bound = 2 * std::pow(3.0, alpha - 1) * run.mst_weight;
        if (!within(run.cost, bound)) return fail("T3 bound: " + describe(run.cost, bound));
      }
      if (geometric && alpha >= 2.0) {
        ++t.checks;
        const double bound = alpha_bound(alpha) * run.mst_weight;
        if (!within(run.cost, bound)) return fail("geometric bound: " + describe(run.cost, bound));
      }
      if (geometric) {
        for (const auto& pair : related_angle_pairs(run.trace, run.tree, pts)) {
          ++t.checks;
          if (pair.slack() < -kBoundTolerance) return fail("related angles violated at vertex " + std::to_string(pair.v));
        }
        ++t.checks;
        if (!find_case_three(run.trace, run.tree, pts).empty()) return fail("three acute 3-shortcut turns at one vertex");
      }
      double total = 0.0;
      for (const auto& c : edge_contributions(run.tour, run.tree, pts, a)) total += c.contrib;
      ++t.checks;
      if (std::abs(total - run.cost) > kBoundTolerance * run.cost) return fail("contributions do not sum to cost");
    }
  }
  return std::nullopt;
}

std::optional<Failure> exact_ratio(Trial& t) {
  const std::size_t n = t.pick(3, 10);
  const PointSet pts = gen_random(n, 2, t.seed);
  const Alpha a(2.0);
  const auto run = solve_t3(pts, a, SelectionPolicy::geometric());
  const auto opt = held_karp(DistanceMatrix::from_points(pts, a));
  t.checks += 2;
  if (!within(run.mst_weight, opt.cost)) return Failure{"MST above OPT", as_file(pts, 2.0, t)};
  if (!within(run.cost, 5 * opt.cost)) return Failure{describe(run.cost, 5 * opt.cost), as_file(pts, 2.0, t)};
  return std::nullopt;
}

// ---------------------------------------------------------------- gabriel

bool properly_cross(PointView a, PointView b, PointView c, PointView d) {
  auto orient = [](PointView p, PointView q, PointView r) {
    const double v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
  };
  const int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

std::optional<Failure> gabriel_structure(Trial& t) {
  const std::size_t n = t.pick(3, 40);
  const PointSet pts = gen_random(n, 2, t.seed);
  const Alpha a(2.0);
  const auto g = build_gabriel(pts, a);
  const auto mst = build_mst(pts, a);
  for (const auto& e : mst.edges()) {
    ++t.checks;
    if (!g.has_edge(e.u, e.v)) return Failure{"MST edge missing from the Gabriel graph", as_file(pts, 2.0, t)};
  }
  ++t.checks;
  if (g.edge_count() > 3 * n - 6) return Failure{"too many edges for a planar graph", as_file(pts, 2.0, t)};
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      ++t.checks;
      if (properly_cross(pts[edges[i].u], pts[edges[i].v], pts[edges[j].u], pts[edges[j].v])) {
        return Failure{"Gabriel edges cross", as_file(pts, 2.0, t)};
      }
    }
  }
  return std::nullopt;
}

std::optional<Failure> closure_equivalence(Trial& t) {
  const std::size_t n = t.pick(2, 7);
  const PointSet pts = gen_random(n, 2, t.seed);
  for (double alpha : {2.0, 3.0}) {
    const Alpha a(alpha);
    const auto gab = rev_tsp_exact(pts, a, ClosureBase::Gabriel);
    const auto full = rev_tsp_exact(pts, a, ClosureBase::Complete);
    const auto tsp = held_karp(DistanceMatrix::from_points(pts, a));
    const double mst = mst_lower_bound(pts, a);
    t.checks += 3;
    if (std::abs(gab.cost - full.cost) > kBoundTolerance * full.cost) {
      return Failure{"Gabriel closure " + std::to_string(gab.cost) + " vs complete " + std::to_string(full.cost),
                     as_file(pts, alpha, t)};
    }
    if (!within(full.cost, tsp.cost)) return Failure{"revisits made the tour longer", as_file(pts, alpha, t)};
    if (!within(mst, full.cost)) return Failure{"MST above the revisit optimum", as_file(pts, alpha, t)};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- gadget

std::optional<Failure> gadget(Trial& t) {
  GadgetSpec spec;
  spec.n = t.pick(3, 5);
  spec.density = 2;
  for (std::size_t k = 0; k < gadget_edge_count(spec.n); ++k) spec.weights.push_back(static_cast<int>(t.pick(1, 2)));
  const auto g = build_gadget(spec);
  for (const auto& gap : g.gaps) {
    ++t.checks;
    if (std::abs(gap.delta * gap.delta - gap.weight) > 1e-12) {
      return Failure{"gap of edge " + std::to_string(gap.edge) + " costs " + std::to_string(gap.delta * gap.delta), {}};
    }
  }
  const double total = g.total_length();
  const double n4 = std::pow(static_cast<double>(spec.n), 4);
  const double slack = 4 * total / static_cast<double>(spec.density);
  t.checks += 3;
  if (!(total < 2 * n4)) return Failure{"segment length " + describe(total, 2 * n4), {}};
  if (!within(g.double_traversal_cost(Alpha(2.0)), slack)) return Failure{"intra-cluster traversal too expensive", {}};
  const auto corr = gadget_cost_correspondence(spec);
  if (corr.gadget_cost < corr.source_opt - kBoundTolerance || !within(corr.gadget_cost, corr.source_opt + slack) ||
      std::abs(corr.jump_cost - corr.source_opt) > kBoundTolerance * corr.source_opt) {
    return Failure{"gadget tour " + std::to_string(corr.gadget_cost) + " vs source optimum " +
                       std::to_string(corr.source_opt),
                   {}};
  }
  return std::nullopt;
}

const std::vector<Property>& all_properties() {
  static const std::vector<Property> props = {
      {"lemmas", "relaxed-triangle-inequality", relaxed_triangle},
      {"lemmas", "k-shortcut-bound", k_shortcut},
      {"lemmas", "three-shortcut-formula", three_shortcut},
      {"lemmas", "young-inequality", young},
      {"lemmas", "two-leg-replacement", two_leg},
      {"lemmas", "h-maximum-at-zero", h_maximum},
      {"bounds", "t3-tours-and-bounds", t3_runs},
      {"bounds", "geometric-t3-vs-exact", exact_ratio},
      {"gabriel", "gabriel-structure", gabriel_structure},
      {"gabriel", "revisit-closure-equivalence", closure_equivalence},
      {"gadget", "gadget-calibration", gadget},
  };
  return props;
}

PropertyOutcome run_property(const Property& prop, std::size_t prop_index, const VerifyOptions& opt) {
  PropertyOutcome out{prop.suite, prop.name, 0, {}};
  std::atomic<std::size_t> next{0};
  std::mutex lock;
  auto worker = [&] {
    std::size_t local_checks = 0;
    std::vector<Counterexample> local_failures;
    for (std::size_t i = next++; i < opt.trials; i = next++) {
      const std::uint64_t seed = mix(opt.seed ^ mix(prop_index * 0x100000001ULL + i));
      Trial t{i, seed, std::mt19937_64(seed)};
      std::optional<Failure> failure;
      try {
        failure = prop.check(t);
      } catch (const std::exception& e) {
        failure = Failure{std::string("exception: ") + e.what(), {}};
      }
      local_checks += t.checks;
      if (failure) local_failures.push_back({prop.name, i, failure->detail, failure->instance});
    }
    std::lock_guard guard(lock);
    out.checks += local_checks;
    for (auto& f : local_failures) out.failures.push_back(std::move(f));
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(opt.threads, opt.trials));
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::sort(out.failures.begin(), out.failures.end(),
            [](const Counterexample& a, const Counterexample& b) { return a.trial < b.trial; });
  return out;
}

}  // namespace

Suite parse_suite(const std::string& name) {
  if (name == "lemmas") return Suite::Lemmas;
  if (name == "bounds") return Suite::Bounds;
  if (name == "gabriel") return Suite::Gabriel;
  if (name == "gadget") return Suite::Gadget;
  if (name == "all") return Suite::All;
  throw std::invalid_argument("unknown suite '" + name + "'");
}

bool VerifyReport::passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyOutcome& p) { return p.failures.empty(); });
}

VerifyReport run_verify(Suite suite, const VerifyOptions& options) {
  static constexpr const char* kNames[] = {"lemmas", "bounds", "gabriel", "gadget"};
  VerifyReport report;
  const auto& props = all_properties();
  for (std::size_t i = 0; i < props.size(); ++i) {
    if (suite != Suite::All && std::string(props[i].suite) != kNames[static_cast<int>(suite)]) continue;
    report.properties.push_back(run_property(props[i], i, options));
  }
  return report;
}

}  // namespace pwtsp
