#include "pwtsp/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "pwtsp/error.hpp"
#include "pwtsp/exact.hpp"

namespace pwtsp {

namespace {

constexpr std::pair<Algorithm, const char*> kAlgorithmIds[] = {
    {Algorithm::GeoT3, "geo-t3"},
    {Algorithm::T3, "t3"},
    {Algorithm::DoubleTree, "double-tree"},
    {Algorithm::Exact, "exact"},
    {Algorithm::RevTspExact, "revtsp-exact"},
};

}  // namespace

std::string algorithm_id(Algorithm alg) {
  for (const auto& [a, id] : kAlgorithmIds) {
    if (a == alg) return id;
  }
  return "unknown";
}

Algorithm parse_algorithm(const std::string& id) {
  for (const auto& [a, name] : kAlgorithmIds) {
    if (id == name) return a;
  }
  throw std::invalid_argument("unknown algorithm '" + id + "'");
}

ContributionSummary summarize_contributions(const std::vector<EdgeContribution>& contributions) {
  ContributionSummary s;
  s.histogram.assign(ContributionSummary::kBins, 0);
  for (const auto& c : contributions) {
    s.max_ratio = std::max(s.max_ratio, c.ratio);
    const auto bin = static_cast<std::size_t>(std::max(0.0, c.ratio) / ContributionSummary::kBinWidth);
    ++s.histogram[std::min(bin, ContributionSummary::kBins - 1)];
  }
  return s;
}

nlohmann::json report_to_json(const RunReport& r) {
  using nlohmann::json;
  json j;
  j["schema_version"] = RunReport::kSchemaVersion;
  j["instance"] = {{"source", r.instance.source},
                   {"n", r.instance.n},
                   {"dim", r.instance.dim},
                   {"alpha", r.instance.alpha},
                   {"seed", r.instance.seed ? json(*r.instance.seed) : json(nullptr)}};
  j["algorithm"] = r.algorithm;
  auto mst = json::array();
  for (const auto& [u, v] : r.mst_edges) mst.push_back({u, v});
  j["mst_edges"] = std::move(mst);
  auto legs = json::array();
  for (const auto& leg : r.tour.legs) legs.push_back(leg.edges);
  j["tour"] = {{"order", r.tour.order}, {"legs", std::move(legs)}};
  if (!r.walk.empty()) {
    j["walk"] = {{"sequence", r.walk}, {"revisited", std::vector<bool>(r.revisit)}};
  }
  j["cost"] = r.cost;
  j["mst_weight"] = r.mst_weight;
  j["opt"] = r.opt ? json(*r.opt) : json(nullptr);
  j["ratio_vs_mst"] = r.ratio_vs_mst;
  j["ratio_vs_opt"] = r.ratio_vs_opt ? json(*r.ratio_vs_opt) : json(nullptr);
  if (r.contributions) {
    j["contributions"] = {{"max_ratio", r.contributions->max_ratio},
                          {"bin_width", ContributionSummary::kBinWidth},
                          {"histogram", r.contributions->histogram}};
  } else {
    j["contributions"] = nullptr;
  }
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

RunReport report_from_json(const nlohmann::json& j) {
  try {
    if (j.at("schema_version").get<int>() != RunReport::kSchemaVersion) {
      throw IoError("unsupported report schema version " + j.at("schema_version").dump());
    }
    RunReport r;
    const auto& inst = j.at("instance");
    r.instance.source = inst.at("source").get<std::string>();
    r.instance.n = inst.at("n").get<std::size_t>();
    r.instance.dim = inst.at("dim").get<std::size_t>();
    r.instance.alpha = inst.at("alpha").get<double>();
    if (!inst.at("seed").is_null()) r.instance.seed = inst.at("seed").get<std::uint64_t>();
    r.algorithm = j.at("algorithm").get<std::string>();
    for (const auto& e : j.at("mst_edges")) {
      r.mst_edges.emplace_back(e.at(0).get<VertexId>(), e.at(1).get<VertexId>());
    }
    r.tour.order = j.at("tour").at("order").get<std::vector<VertexId>>();
    for (const auto& leg : j.at("tour").at("legs")) r.tour.legs.push_back({leg.get<std::vector<EdgeId>>()});
    if (j.contains("walk")) {
      r.walk = j.at("walk").at("sequence").get<std::vector<VertexId>>();
      r.revisit = j.at("walk").at("revisited").get<std::vector<bool>>();
    }
    r.cost = j.at("cost").get<double>();
    r.mst_weight = j.at("mst_weight").get<double>();
    if (!j.at("opt").is_null()) r.opt = j.at("opt").get<double>();
    r.ratio_vs_mst = j.at("ratio_vs_mst").get<double>();
    if (!j.at("ratio_vs_opt").is_null()) r.ratio_vs_opt = j.at("ratio_vs_opt").get<double>();
    if (!j.at("contributions").is_null()) {
      ContributionSummary s;
      s.max_ratio = j.at("contributions").at("max_ratio").get<double>();
      s.histogram = j.at("contributions").at("histogram").get<std::vector<std::size_t>>();
      r.contributions = s;
    }
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed report: ") + e.what());
  }
}

double rescore(const RunReport& report, const PointSet& points) {
  const auto& route = report.route();
  for (VertexId v : route) {
    if (v >= points.size()) throw IoError("report route names vertex " + std::to_string(v));
  }
  return tour_cost(points, route, Alpha(report.instance.alpha));
}

RunReport run_algorithm(const PointSet& points, Alpha a, Algorithm alg, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = points.size();
  if (n == 0) throw InstanceError("empty instance");
  if (alg == Algorithm::GeoT3 && n > 1 && points.dim() != 2) {
    throw std::invalid_argument("geo-t3 needs planar points, got dimension " + std::to_string(points.dim()));
  }
  const bool needs_exact = alg == Algorithm::Exact || alg == Algorithm::RevTspExact || options.with_opt;
  if (needs_exact && n > kHeldKarpMaxCities) {
    throw OracleSizeError("exact optimum is limited to " + std::to_string(kHeldKarpMaxCities) + " cities");
  }

  RunReport r;
  r.instance.n = n;
  r.instance.dim = points.dim();
  r.instance.alpha = a.value();
  r.algorithm = algorithm_id(alg);

  const Tree tree = build_mst(points, a);
  r.mst_weight = tree.total_weight();
  for (const auto& e : tree.edges()) r.mst_edges.emplace_back(e.u, e.v);

  switch (alg) {
    case Algorithm::GeoT3:
    case Algorithm::T3: {
      const auto policy = alg == Algorithm::GeoT3      ? SelectionPolicy::geometric()
                          : options.policy_seed != 0 ? SelectionPolicy::random(options.policy_seed)
                                                     : SelectionPolicy::arbitrary();
      auto solved = solve_t3(points, a, policy, options.root_edge);
      r.tour = std::move(solved.tour);
      r.cost = solved.cost;
      break;
    }
    case Algorithm::DoubleTree: {
      auto solved = solve_double_tree_naive(points, a);
      r.tour = std::move(solved.tour);
      r.cost = solved.cost;
      break;
    }
    case Algorithm::Exact: {
      if (n == 1) {
        r.tour.order = {0};
      } else {
        const auto exact = held_karp(DistanceMatrix::from_points(points, a));
        r.tour.order = exact.order;
        r.cost = exact.cost;
      }
      r.opt = r.cost;
      break;
    }
    case Algorithm::RevTspExact: {
      auto rev = rev_tsp_exact(points, a);
      r.walk = std::move(rev.walk);
      r.revisit = std::move(rev.revisit);
      r.cost = rev.cost;
      break;
    }
  }
  if (!r.tour.legs.empty()) r.contributions = summarize_contributions(edge_contributions(r.tour, tree, points, a));
  if (options.with_opt && !r.opt) {
    r.opt = n == 1 ? 0.0 : held_karp(DistanceMatrix::from_points(points, a)).cost;
  }
  r.ratio_vs_mst = r.mst_weight > 0.0 ? r.cost / r.mst_weight : 1.0;
  // A walk with revisits can undercut the Hamiltonian optimum, so no ratio.
  if (r.opt && alg != Algorithm::RevTspExact) r.ratio_vs_opt = *r.opt > 0.0 ? r.cost / *r.opt : 1.0;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace pwtsp
