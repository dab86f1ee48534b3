#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pwtsp/analysis.hpp"
#include "pwtsp/geometry.hpp"
#include "pwtsp/spanning.hpp"
#include "pwtsp/tour.hpp"

namespace pwtsp {

enum class Algorithm { GeoT3, T3, DoubleTree, Exact, RevTspExact };

std::string algorithm_id(Algorithm alg);
// Inverse of algorithm_id; throws std::invalid_argument on unknown ids.
Algorithm parse_algorithm(const std::string& id);

struct InstanceDescriptor {
  std::string source;
  std::size_t n = 0;
  std::size_t dim = 0;
  double alpha = 2.0;
  std::optional<std::uint64_t> seed;
};

struct ContributionSummary {
  static constexpr double kBinWidth = 0.5;
  static constexpr std::size_t kBins = 14;  // last bin also takes everything above
  double max_ratio = 0.0;
  std::vector<std::size_t> histogram;
};

ContributionSummary summarize_contributions(const std::vector<EdgeContribution>& contributions);

struct RunReport {
  static constexpr int kSchemaVersion = 1;

  InstanceDescriptor instance;
  std::string algorithm;
  std::vector<std::pair<VertexId, VertexId>> mst_edges;  // legs index into this list
  Tour tour;                       // Hamiltonian algorithms
  std::vector<VertexId> walk;      // revtsp-exact: closed walk with revisits
  std::vector<bool> revisit;
  double cost = 0.0;
  double mst_weight = 0.0;
  std::optional<double> opt;
  double ratio_vs_mst = 1.0;
  std::optional<double> ratio_vs_opt;
  std::optional<ContributionSummary> contributions;
  double elapsed_ms = 0.0;

  // Visiting sequence the cost is measured on: the walk when present,
  // otherwise the tour order.
  const std::vector<VertexId>& route() const { return walk.empty() ? tour.order : walk; }
};

nlohmann::json report_to_json(const RunReport& report);
// Throws IoError on schema mismatches.
RunReport report_from_json(const nlohmann::json& j);

// Cost of the report's route recomputed from the points.
double rescore(const RunReport& report, const PointSet& points);

struct RunOptions {
  bool with_opt = false;
  std::optional<std::pair<VertexId, VertexId>> root_edge;
  std::uint64_t policy_seed = 0;
};

// Runs one algorithm and assembles its report (instance.source/seed are left
// to the caller). GeoT3 needs planar points; Exact and RevTspExact, and
// with_opt, need n <= kHeldKarpMaxCities.
RunReport run_algorithm(const PointSet& points, Alpha a, Algorithm alg, const RunOptions& options);

}  // namespace pwtsp
