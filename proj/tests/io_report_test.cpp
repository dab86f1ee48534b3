#include <filesystem>
#include <fstream>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <gtest/gtest.h>

#include "pwtsp/error.hpp"
#include "pwtsp/instance_io.hpp"
#include "pwtsp/instances.hpp"
#include "pwtsp/report.hpp"
#include "pwtsp/svg.hpp"

using namespace pwtsp;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "pwtsp_io_test";
  fs::create_directories(dir);
  return dir / name;
}

TEST(Csv, RoundTripIsExact) {
  const auto pts = gen_random(50, 3, 12);
  std::stringstream buf;
  write_csv_points(buf, pts);
  const auto back = read_csv_points(buf);
  EXPECT_EQ(back.flat(), pts.flat());
  EXPECT_EQ(back.dim(), 3u);
}

TEST(Csv, SkipsCommentsAndBlankLines) {
  std::stringstream in("# header\n\n0,0\n 1.5 , 2\n\n# tail\n");
  const auto pts = read_csv_points(in);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[1][0], 1.5);
}

TEST(Csv, RejectsMalformedRows) {
  std::stringstream ragged("0,0\n1,2,3\n");
  EXPECT_THROW(read_csv_points(ragged), IoError);
  std::stringstream junk("0,0\n1,abc\n");
  EXPECT_THROW(read_csv_points(junk), IoError);
  std::stringstream dup("0,0\n0,0\n");
  EXPECT_THROW(read_csv_points(dup), InstanceError);
}

TEST(Json, EnvelopeRoundTrip) {
  InstanceFile f;
  f.points = gen_random(7, 2, 3);
  f.alpha = 2.5;
  f.labels = {0, 0, 1, 1, 2, 2, 2};
  f.meta = {{"generator", "test"}};
  const auto back = parse_instance_json(instance_to_json(f));
  EXPECT_EQ(back.points.flat(), f.points.flat());
  EXPECT_EQ(back.alpha, 2.5);
  EXPECT_EQ(back.labels, f.labels);
  EXPECT_EQ(back.meta["generator"], "test");
}

TEST(Json, RejectsBadEnvelopes) {
  EXPECT_THROW(parse_instance_json(nlohmann::json{{"dim", 2}}), IoError);
  EXPECT_THROW(parse_instance_json(nlohmann::json::parse(R"({"dim":2,"points":[[0,0],[1]]})")), std::exception);
  EXPECT_THROW(parse_instance_json(nlohmann::json::parse(R"({"dim":2,"points":[[0,0]],"labels":[1,2]})")),
               std::exception);
}

TEST(Files, DispatchOnExtension) {
  InstanceFile f;
  f.points = gen_grid(2, 2);
  f.alpha = 3.0;
  write_instance(scratch("grid.json"), f);
  write_instance(scratch("grid.csv"), f);
  EXPECT_EQ(read_instance(scratch("grid.json")).alpha, 3.0);
  EXPECT_FALSE(read_instance(scratch("grid.csv")).alpha.has_value());
  EXPECT_EQ(read_instance(scratch("grid.csv")).points.flat(), f.points.flat());
  EXPECT_THROW(read_instance(scratch("missing.csv")), IoError);
  std::ofstream(scratch("broken.json")) << "{ nope";
  EXPECT_THROW(read_instance(scratch("broken.json")), IoError);
}

TEST(Report, AlgorithmIds) {
  for (auto alg : {Algorithm::GeoT3, Algorithm::T3, Algorithm::DoubleTree, Algorithm::Exact, Algorithm::RevTspExact})
    EXPECT_EQ(parse_algorithm(algorithm_id(alg)), alg);
  EXPECT_THROW(parse_algorithm("christofides"), std::invalid_argument);
}

TEST(Report, RoundTripAndRescore) {
  const auto pts = gen_random(12, 2, 4);
  for (auto alg : {Algorithm::GeoT3, Algorithm::T3, Algorithm::DoubleTree, Algorithm::Exact, Algorithm::RevTspExact}) {
    const auto r = run_algorithm(pts, Alpha(2), alg, {.with_opt = true});
    const auto back = report_from_json(nlohmann::json::parse(report_to_json(r).dump()));
    EXPECT_EQ(report_to_json(back), report_to_json(r));
    EXPECT_NEAR(rescore(back, pts), r.cost, 1e-9 * r.cost) << algorithm_id(alg);
    EXPECT_GE(r.ratio_vs_mst, 1.0);
    if (r.ratio_vs_opt) {
      EXPECT_GE(*r.ratio_vs_opt, 1.0 - 1e-12);
      EXPECT_LE(*r.ratio_vs_opt, 5.0);
    }
  }
}

TEST(Report, SchemaVersionChecked) {
  auto j = report_to_json(run_algorithm(gen_random(5, 2, 1), Alpha(2), Algorithm::T3, {}));
  j["schema_version"] = 2;
  EXPECT_THROW(report_from_json(j), IoError);
  j.erase("schema_version");
  EXPECT_THROW(report_from_json(j), IoError);
}

TEST(Report, IdenticalRunsAreByteIdenticalApartFromTiming) {
  const auto pts = gen_random(40, 2, 9);
  for (auto alg : {Algorithm::GeoT3, Algorithm::T3, Algorithm::DoubleTree}) {
    RunOptions opt;
    opt.policy_seed = 77;
    auto a = report_to_json(run_algorithm(pts, Alpha(2.5), alg, opt));
    auto b = report_to_json(run_algorithm(pts, Alpha(2.5), alg, opt));
    a.erase("elapsed_ms");
    b.erase("elapsed_ms");
    EXPECT_EQ(a.dump(2), b.dump(2));
  }
}

TEST(Report, ChainExamples) {
  const auto chain4 = gen_collinear_chain(4, 1.0);
  RunOptions middle;
  middle.root_edge = std::pair<VertexId, VertexId>{1, 2};
  EXPECT_DOUBLE_EQ(run_algorithm(chain4, Alpha(2), Algorithm::GeoT3, middle).ratio_vs_mst, 4.0);
  EXPECT_DOUBLE_EQ(run_algorithm(gen_collinear_chain(100, 1.0), Alpha(2), Algorithm::DoubleTree, {}).ratio_vs_mst,
                   100.0);
}

TEST(Report, Guards) {
  EXPECT_THROW(run_algorithm(gen_random(5, 3, 1), Alpha(2), Algorithm::GeoT3, {}), std::invalid_argument);
  EXPECT_THROW(run_algorithm(gen_random(23, 2, 1), Alpha(2), Algorithm::Exact, {}), OracleSizeError);
  EXPECT_THROW(run_algorithm(gen_random(23, 2, 1), Alpha(2), Algorithm::T3, {.with_opt = true}), OracleSizeError);
}

TEST(Report, ContributionHistogram) {
  std::vector<EdgeContribution> c{{0, 1, 0.2}, {1, 1, 2.0}, {2, 1, 2.49}, {3, 1, 100.0}};
  const auto s = summarize_contributions(c);
  EXPECT_EQ(s.max_ratio, 100.0);
  ASSERT_EQ(s.histogram.size(), ContributionSummary::kBins);
  EXPECT_EQ(s.histogram[0], 1u);
  EXPECT_EQ(s.histogram[4], 2u);
  EXPECT_EQ(s.histogram.back(), 1u);
}

struct SvgCounts {
  std::size_t cities = 0, revisits = 0, tour = 0, mst = 0;
};

SvgCounts parse_svg(const std::string& text) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  std::istringstream in(text);
  pt::read_xml(in, tree);
  SvgCounts c;
  for (const auto& [tag, node] : tree.get_child("svg")) {
    const auto cls = node.get<std::string>("<xmlattr>.class", "");
    if (tag == "circle") {
      ++c.cities;
      if (cls.find("revisit") != std::string::npos) ++c.revisits;
    } else if (tag == "line") {
      c.tour += cls == "tour";
      c.mst += cls == "mst";
    } else if (tag == "g") {
      for (const auto& [inner, child] : node) {
        const auto icls = child.get<std::string>("<xmlattr>.class", cls);
        if (inner == "circle") {
          ++c.cities;
          if (icls.find("revisit") != std::string::npos) ++c.revisits;
        } else if (inner == "line") {
          c.tour += icls == "tour";
          c.mst += icls == "mst";
        }
      }
    }
  }
  return c;
}

TEST(Svg, ValidXmlWithOneGlyphAndStrokePerCity) {
  for (std::size_t n : {1u, 2u, 5u, 60u}) {
    const auto pts = gen_random(n, 2, n);
    const auto r = solve_t3(pts, Alpha(2), SelectionPolicy::geometric());
    const auto c = parse_svg(render_svg(pts, r.tree, r.tour.order));
    EXPECT_EQ(c.cities, n);
    EXPECT_EQ(c.tour, n == 1 ? 0u : n);
    EXPECT_EQ(c.mst, n - 1);
    EXPECT_EQ(c.revisits, 0u);
  }
}

TEST(Svg, HighlightsRevisits) {
  const auto pts = gen_collinear_chain(4, 1.0);
  const auto r = run_algorithm(pts, Alpha(2), Algorithm::RevTspExact, {});
  const auto c = parse_svg(render_svg(pts, build_mst(pts, Alpha(2)), r.route(), r.revisit));
  EXPECT_EQ(c.cities, 4u);
  EXPECT_EQ(c.revisits, 2u);
  EXPECT_EQ(c.tour, r.walk.size());
}

TEST(Svg, DegenerateExtent) {
  const PointSet pts({Point{5, 5}, Point{5, 6}, Point{5, 7}});
  const auto t = build_mst(pts, Alpha(2));
  const auto svg = render_svg(pts, t, {0, 1, 2});
  EXPECT_EQ(svg.find("nan"), std::string::npos);
  EXPECT_EQ(svg.find("inf"), std::string::npos);
  EXPECT_EQ(parse_svg(svg).cities, 3u);
}

}  // namespace
