#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace pwtsp {

using PointView = std::span<const double>;

// Relative tolerance applied to every bound assertion in the library.
inline constexpr double kBoundTolerance = 1e-9;

class Point {
 public:
  Point() = default;
  Point(std::initializer_list<double> coords) : coords_(coords) {}
  explicit Point(std::vector<double> coords) : coords_(std::move(coords)) {}
  explicit Point(PointView view) : coords_(view.begin(), view.end()) {}

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<double>& coords() const { return coords_; }

  operator PointView() const { return coords_; }  // NOLINT(google-explicit-constructor)

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

// Exponent of the power distance |pq|^alpha. Always positive and finite.
class Alpha {
 public:
  explicit Alpha(double value);
  double value() const { return value_; }

 private:
  double value_;
};

// Immutable set of distinct points of one common dimension, stored flat.
class PointSet {
 public:
  PointSet() = default;
  // Throws InstanceError on mixed dimensions, non-finite coordinates or
  // duplicate points.
  explicit PointSet(const std::vector<Point>& points);
  PointSet(std::size_t dim, std::vector<double> flat_coords);

  std::size_t size() const { return n_; }
  std::size_t dim() const { return dim_; }
  bool empty() const { return n_ == 0; }
  PointView operator[](std::size_t i) const {
    return PointView(coords_).subspan(i * dim_, dim_);
  }
  const std::vector<double>& flat() const { return coords_; }

 private:
  void validate() const;

  std::size_t dim_ = 0;
  std::size_t n_ = 0;
  std::vector<double> coords_;
};

double squared_dist(PointView p, PointView q);
double euclid_dist(PointView p, PointView q);
double power_dist(PointView p, PointView q, Alpha a);

// The smaller angle between segments (shared,u) and (shared,v) together with
// psi = pi - angle.
struct AnglePair {
  double angle;
  double psi;
};

AnglePair angle_between(PointView shared, PointView u, PointView v);

// +1 if a_end and c_end lie on the same side of the line through
// (b_from, b_to) or either of them lies on it; -1 if strictly opposite.
// Planar points only.
int same_side(PointView b_from, PointView b_to, PointView a_end, PointView c_end);

}  // namespace pwtsp
