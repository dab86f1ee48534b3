#include "pwtsp/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "pwtsp/error.hpp"

namespace pwtsp {

namespace {

void require_same_dim(PointView p, PointView q) {
  if (p.size() != q.size()) {
    throw InstanceError("dimension mismatch: " + std::to_string(p.size()) + " vs " +
                        std::to_string(q.size()));
  }
}

// Relative threshold below which a cross product counts as zero.
constexpr double kSideTolerance = 1e-12;

}  // namespace

Alpha::Alpha(double value) : value_(value) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw std::invalid_argument("alpha must be positive and finite, got " +
                                std::to_string(value));
  }
}

PointSet::PointSet(const std::vector<Point>& points) : n_(points.size()) {
  dim_ = points.empty() ? 0 : points.front().dim();
  coords_.reserve(n_ * dim_);
  for (const auto& p : points) {
    if (p.dim() != dim_) {
      throw InstanceError("all points must share one dimension");
    }
    coords_.insert(coords_.end(), p.coords().begin(), p.coords().end());
  }
  validate();
}

PointSet::PointSet(std::size_t dim, std::vector<double> flat_coords)
    : dim_(dim), coords_(std::move(flat_coords)) {
  if (dim_ == 0) {
    if (!coords_.empty()) throw InstanceError("zero-dimensional points carry no coordinates");
    n_ = 0;
    return;
  }
  if (coords_.size() % dim_ != 0) {
    throw InstanceError("coordinate count is not a multiple of the dimension");
  }
  n_ = coords_.size() / dim_;
  validate();
}

void PointSet::validate() const {
  if (n_ > 0 && dim_ == 0) throw InstanceError("points need at least one coordinate");
  for (double c : coords_) {
    if (!std::isfinite(c)) throw InstanceError("non-finite coordinate");
  }
  std::vector<std::size_t> idx(n_);
  for (std::size_t i = 0; i < n_; ++i) idx[i] = i;
  auto less = [this](std::size_t a, std::size_t b) {
    auto pa = (*this)[a];
    auto pb = (*this)[b];
    return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
  };
  std::sort(idx.begin(), idx.end(), less);
  for (std::size_t i = 1; i < n_; ++i) {
    auto pa = (*this)[idx[i - 1]];
    auto pb = (*this)[idx[i]];
    if (std::equal(pa.begin(), pa.end(), pb.begin())) {
      throw InstanceError("duplicate point at indices " + std::to_string(idx[i - 1]) + " and " +
                          std::to_string(idx[i]));
    }
  }
}

double squared_dist(PointView p, PointView q) {
  require_same_dim(p, q);
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = p[i] - q[i];
    s += d * d;
  }
  return s;
}

double euclid_dist(PointView p, PointView q) { return std::sqrt(squared_dist(p, q)); }

double power_dist(PointView p, PointView q, Alpha a) {
  const double sq = squared_dist(p, q);
  if (a.value() == 2.0) return sq;
  return std::pow(sq, a.value() / 2.0);
}

AnglePair angle_between(PointView shared, PointView u, PointView v) {
  require_same_dim(shared, u);
  require_same_dim(shared, v);
  double dot = 0.0, nu = 0.0, nv = 0.0;
  for (std::size_t i = 0; i < shared.size(); ++i) {
    const double du = u[i] - shared[i];
    const double dv = v[i] - shared[i];
    dot += du * dv;
    nu += du * du;
    nv += dv * dv;
  }
  if (nu == 0.0 || nv == 0.0) throw InstanceError("angle of a zero-length segment");
  const double c = std::clamp(dot / std::sqrt(nu * nv), -1.0, 1.0);
  const double angle = std::acos(c);
  return {angle, std::numbers::pi - angle};
}

int same_side(PointView b_from, PointView b_to, PointView a_end, PointView c_end) {
  if (b_from.size() != 2 || b_to.size() != 2 || a_end.size() != 2 || c_end.size() != 2) {
    throw InstanceError("same_side is defined for planar points only");
  }
  const double bx = b_to[0] - b_from[0];
  const double by = b_to[1] - b_from[1];
  const double blen = std::hypot(bx, by);
  if (blen == 0.0) throw InstanceError("line through a zero-length segment");
  auto side = [&](PointView p) {
    const double px = p[0] - b_from[0];
    const double py = p[1] - b_from[1];
    const double cross = bx * py - by * px;
    const double scale = blen * std::max(std::hypot(px, py), blen);
    return std::abs(cross) <= kSideTolerance * scale ? 0 : (cross > 0 ? 1 : -1);
  };
  const int sa = side(a_end);
  const int sc = side(c_end);
  if (sa == 0 || sc == 0) return +1;
  return sa == sc ? +1 : -1;
}

}  // namespace pwtsp
