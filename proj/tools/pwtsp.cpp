#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pwtsp/error.hpp"
#include "pwtsp/instance_io.hpp"
#include "pwtsp/instances.hpp"
#include "pwtsp/report.hpp"
#include "pwtsp/spanning.hpp"
#include "pwtsp/svg.hpp"
#include "pwtsp/verify.hpp"

namespace fs = std::filesystem;
using namespace pwtsp;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::vector<int> parse_weights(const std::string& text) {
  std::vector<int> weights;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "1" || item == "2") {
      weights.push_back(item[0] - '0');
    } else {
      throw UsageError("weights must be a comma separated list of 1s and 2s, got '" + item + "'");
    }
  }
  return weights;
}

struct GenerateArgs {
  std::string kind;
  std::size_t n = 0;
  std::size_t d = 2;
  std::uint64_t seed = 1;
  double spacing = 1.0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::string weights;
  std::size_t density = 1;
  std::optional<double> alpha;
  std::string out;
};

void emit_instance(const InstanceFile& inst, const std::string& out) {
  if (out.empty() || out == "-") {
    write_csv_points(std::cout, inst.points);
  } else {
    write_instance(out, inst);
  }
}

int cmd_generate(const GenerateArgs& g) {
  InstanceFile inst;
  inst.alpha = g.alpha;
  if (g.kind == "random") {
    if (g.n < 1 || g.d < 1) throw UsageError("random needs --n >= 1 and --d >= 1");
    inst.points = gen_random(g.n, g.d, g.seed);
    inst.meta = {{"generator", "random"}, {"seed", g.seed}};
  } else if (g.kind == "chain") {
    if (g.n < 1 || !(g.spacing > 0)) throw UsageError("chain needs --n >= 1 and --spacing > 0");
    inst.points = gen_collinear_chain(g.n, g.spacing);
    inst.meta = {{"generator", "chain"}, {"spacing", g.spacing}};
  } else if (g.kind == "grid") {
    if (g.rows < 1 || g.cols < 1) throw UsageError("grid needs --rows and --cols >= 1");
    inst.points = gen_grid(g.rows, g.cols);
    inst.meta = {{"generator", "grid"}, {"rows", g.rows}, {"cols", g.cols}};
  } else {
    GadgetSpec spec;
    spec.n = g.n;
    spec.density = g.density;
    spec.weights = g.weights.empty() ? std::vector<int>(g.n >= 2 ? gadget_edge_count(g.n) : 0, 1)
                                     : parse_weights(g.weights);
    try {
      spec.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    GadgetInstance gadget;
    try {
      gadget = build_gadget(spec);
    } catch (const std::length_error& e) {
      throw UsageError(e.what());
    }
    inst.points = gadget.points;
    if (!inst.alpha) inst.alpha = 2.0;
    inst.labels.assign(gadget.cluster.begin(), gadget.cluster.end());
    nlohmann::json gaps = nlohmann::json::array();
    for (const auto& gap : gadget.gaps) {
      gaps.push_back({{"edge", gap.edge}, {"cities", {gap.city_i, gap.city_j}}, {"weight", gap.weight}});
    }
    inst.meta = {{"generator", "gadget"}, {"n", spec.n}, {"density", spec.density},
                 {"weights", spec.weights}, {"gaps", gaps}};
  }
  emit_instance(inst, g.out);
  return kOk;
}

struct SolveArgs {
  std::string instance;
  std::string alg = "geo-t3";
  std::optional<double> alpha;
  std::string report;
  std::string svg;
  bool with_opt = false;
  std::vector<VertexId> root_edge;
  std::uint64_t seed = 0;
};

int cmd_solve(const SolveArgs& s) {
  Algorithm alg;
  try {
    alg = parse_algorithm(s.alg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const InstanceFile inst = read_instance(s.instance);
  const double alpha_value = s.alpha.value_or(inst.alpha.value_or(2.0));
  if (!(alpha_value > 0) || !std::isfinite(alpha_value)) throw UsageError("--alpha must be positive");
  if ((alg == Algorithm::T3 || alg == Algorithm::GeoT3) && alpha_value < 1.0) {
    // Cost is still well defined; the bounds just do not apply.
    std::cerr << "note: alpha below 1, T3 bounds do not apply\n";
  }
  RunOptions options;
  options.with_opt = s.with_opt;
  options.policy_seed = s.seed;
  if (!s.root_edge.empty()) {
    if (s.root_edge.size() != 2) throw UsageError("--root-edge takes two city ids");
    options.root_edge = std::pair{s.root_edge[0], s.root_edge[1]};
  }
  if (inst.points.empty()) throw UsageError("instance has no cities");

  RunReport report;
  try {
    report = run_algorithm(inst.points, Alpha(alpha_value), alg, options);
  } catch (const OracleSizeError& e) {
    throw UsageError(e.what());
  } catch (const InstanceError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  report.instance.source = fs::path(s.instance).filename().string();
  if (inst.meta.contains("seed") && inst.meta["seed"].is_number_unsigned()) {
    report.instance.seed = inst.meta["seed"].get<std::uint64_t>();
  }

  const std::string text = report_to_json(report).dump(2) + "\n";
  if (s.report.empty() || s.report == "-") {
    std::cout << text;
  } else {
    write_text(s.report, text);
  }
  if (!s.svg.empty()) {
    const Tree mst = build_mst(inst.points, Alpha(alpha_value));
    std::vector<bool> highlight;
    if (!report.walk.empty()) highlight = report.revisit;
    write_text(s.svg, render_svg(inst.points, mst, report.route(), highlight));
  }
  return kOk;
}

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 1;
  std::size_t trials = 200;
  std::size_t threads = 1;
  std::string dump_dir = "pwtsp-counterexamples";
};

int cmd_verify(const VerifyArgs& v) {
  Suite suite;
  try {
    suite = parse_suite(v.suite);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto start = std::chrono::steady_clock::now();
  const VerifyReport result = run_verify(suite, {v.seed, v.trials, std::max<std::size_t>(1, v.threads)});
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::size_t dumped = 0;
  for (const auto& prop : result.properties) {
    std::cout << (prop.failures.empty() ? "PASS " : "FAIL ") << prop.suite << '/' << prop.name << "  checks="
              << prop.checks << " failures=" << prop.failures.size() << '\n';
    for (const auto& f : prop.failures) {
      std::cout << "  trial " << f.trial << ": " << f.detail << '\n';
      if (!f.instance) continue;
      fs::create_directories(v.dump_dir);
      const fs::path file = fs::path(v.dump_dir) / (prop.name + "-trial" + std::to_string(f.trial) + ".json");
      write_instance(file, *f.instance);
      std::cout << "  replay: " << file.string() << '\n';
      ++dumped;
    }
  }
  std::cout << (result.passed() ? "all properties hold" : "property violation") << " (" << result.properties.size()
            << " properties, " << v.trials << " trials each, " << seconds << " s)\n";
  (void)dumped;
  return result.passed() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"TSP under powered Euclidean distances: generators, solvers and bound checks"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a problem instance (CSV to stdout unless --out is given)");
  generate->add_option("kind", gen.kind, "random | chain | grid | gadget")
      ->required()
      ->check(CLI::IsMember({"random", "chain", "grid", "gadget"}));
  generate->add_option("--n", gen.n, "Number of cities, or source vertices for gadget");
  generate->add_option("--d", gen.d, "Dimension (random)");
  generate->add_option("--seed", gen.seed, "Seed (random)");
  generate->add_option("--spacing", gen.spacing, "Spacing (chain)");
  generate->add_option("--rows", gen.rows, "Rows (grid)");
  generate->add_option("--cols", gen.cols, "Columns (grid)");
  generate->add_option("--weights", gen.weights, "Edge weights in {1,2}, lexicographic edge order (gadget)");
  generate->add_option("--density", gen.density, "Cities per unit length (gadget)");
  generate->add_option("--alpha", gen.alpha, "Exponent recorded in JSON output");
  generate->add_option("--out", gen.out, "Output file; .json writes the envelope, anything else CSV");

  SolveArgs sol;
  auto* solve = app.add_subcommand("solve", "Run a solver on an instance and write a JSON report");
  solve->add_option("instance", sol.instance, "CSV or JSON instance")->required();
  solve->add_option("--alg", sol.alg, "geo-t3 | t3 | double-tree | exact | revtsp-exact");
  solve->add_option("--alpha", sol.alpha, "Exponent (default: the instance's, else 2)");
  solve->add_option("--report", sol.report, "Report path (default stdout)");
  solve->add_option("--svg", sol.svg, "Also draw the tour to this SVG file");
  solve->add_flag("--with-opt", sol.with_opt, "Attach the exact optimum (n <= 22)");
  solve->add_option("--root-edge", sol.root_edge, "MST edge the cycle starts from")->expected(2);
  solve->add_option("--seed", sol.seed, "Seed for the t3 selection policy (0 picks smallest ids)");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Check the bound and structure properties on seeded trials");
  verify->add_option("--suite", ver.suite, "lemmas | bounds | gabriel | gadget | all");
  verify->add_option("--seed", ver.seed, "Master seed");
  verify->add_option("--trials", ver.trials, "Trials per property");
  verify->add_option("--threads", ver.threads, "Worker threads");
  verify->add_option("--dump-dir", ver.dump_dir, "Where failing instances are written");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen);
    if (solve->parsed()) return cmd_solve(sol);
    return cmd_verify(ver);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const InstanceError& e) {
    std::cerr << "error: invalid instance: " << e.what() << '\n';
    return kIo;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
}
