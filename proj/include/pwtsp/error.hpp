#pragma once

#include <stdexcept>
#include <string>

namespace pwtsp {

// Malformed or unsupported problem instance: dimension mismatch, duplicate
// cities, zero-length segments, non-finite coordinates.
class InstanceError : public std::invalid_argument {
 public:
  explicit InstanceError(const std::string& what) : std::invalid_argument(what) {}
};

// An exact oracle was asked to handle more cities than its memory guard allows.
class OracleSizeError : public std::out_of_range {
 public:
  explicit OracleSizeError(const std::string& what) : std::out_of_range(what) {}
};

}  // namespace pwtsp

namespace pwtsp {

// File could not be opened, read, written or parsed.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pwtsp
