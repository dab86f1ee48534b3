#include "pwtsp/instance_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "pwtsp/error.hpp"

namespace pwtsp {

namespace {

double parse_double(std::string_view field, std::size_t line_no) {
  while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
  while (!field.empty() && (field.back() == ' ' || field.back() == '\t' || field.back() == '\r')) {
    field.remove_suffix(1);
  }
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw IoError("line " + std::to_string(line_no) + ": cannot parse '" + std::string(field) +
                  "' as a number");
  }
  return value;
}

std::string format_double(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

PointSet read_csv_points(std::istream& in) {
  std::vector<double> flat;
  std::size_t dim = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') {
      continue;
    }
    std::size_t fields = 0;
    std::string_view rest(line);
    while (true) {
      const auto comma = rest.find(',');
      flat.push_back(parse_double(rest.substr(0, comma), line_no));
      ++fields;
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (dim == 0) dim = fields;
    if (fields != dim) {
      throw IoError("line " + std::to_string(line_no) + ": expected " + std::to_string(dim) +
                    " coordinates, got " + std::to_string(fields));
    }
  }
  return PointSet(dim, std::move(flat));
}

void write_csv_points(std::ostream& out, const PointSet& points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto p = points[i];
    for (std::size_t c = 0; c < p.size(); ++c) {
      if (c > 0) out << ',';
      out << format_double(p[c]);
    }
    out << '\n';
  }
}

InstanceFile parse_instance_json(const nlohmann::json& j) {
  try {
    InstanceFile inst;
    const auto& pts = j.at("points");
    const std::size_t dim = j.contains("dim") ? j.at("dim").get<std::size_t>()
                                              : (pts.empty() ? 0 : pts.front().size());
    std::vector<double> flat;
    flat.reserve(pts.size() * dim);
    for (const auto& p : pts) {
      if (p.size() != dim) throw InstanceError("point dimension disagrees with \"dim\"");
      for (const auto& c : p) flat.push_back(c.get<double>());
    }
    inst.points = PointSet(dim, std::move(flat));
    if (j.contains("alpha") && !j.at("alpha").is_null()) inst.alpha = j.at("alpha").get<double>();
    if (j.contains("labels") && !j.at("labels").is_null()) {
      inst.labels = j.at("labels").get<std::vector<long long>>();
      if (inst.labels.size() != inst.points.size()) throw InstanceError("one label per point expected");
    }
    if (j.contains("meta") && !j.at("meta").is_null()) inst.meta = j.at("meta");
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed instance envelope: ") + e.what());
  }
}

nlohmann::json instance_to_json(const InstanceFile& inst) {
  nlohmann::json j;
  j["alpha"] = inst.alpha ? nlohmann::json(*inst.alpha) : nlohmann::json(nullptr);
  j["dim"] = inst.points.dim();
  auto pts = nlohmann::json::array();
  for (std::size_t i = 0; i < inst.points.size(); ++i) {
    const auto p = inst.points[i];
    pts.push_back(std::vector<double>(p.begin(), p.end()));
  }
  j["points"] = std::move(pts);
  if (!inst.labels.empty()) j["labels"] = inst.labels;
  if (!inst.meta.empty()) j["meta"] = inst.meta;
  return j;
}

InstanceFile read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  if (path.extension() == ".json") {
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw IoError(path.string() + ": " + e.what());
    }
    return parse_instance_json(j);
  }
  InstanceFile inst;
  inst.points = read_csv_points(in);
  return inst;
}

void write_instance(const std::filesystem::path& path, const InstanceFile& inst) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  if (path.extension() == ".json") {
    out << instance_to_json(inst).dump(2) << '\n';
  } else {
    write_csv_points(out, inst.points);
  }
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace pwtsp
