#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pwtsp/geometry.hpp"

namespace pwtsp {

// Instance as stored on disk. CSV files carry points only; the JSON envelope
// {"alpha", "dim", "points", "labels"?, "meta"?} carries the rest.
struct InstanceFile {
  PointSet points;
  std::optional<double> alpha;
  std::vector<long long> labels;  // per point, empty when absent
  nlohmann::json meta = nlohmann::json::object();
};

PointSet read_csv_points(std::istream& in);
void write_csv_points(std::ostream& out, const PointSet& points);

InstanceFile parse_instance_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const InstanceFile& inst);

// Dispatches on the extension: .json is the envelope, anything else CSV.
// Throws IoError on unreadable or malformed files, InstanceError on invalid
// point sets.
InstanceFile read_instance(const std::filesystem::path& path);
void write_instance(const std::filesystem::path& path, const InstanceFile& inst);

}  // namespace pwtsp
