#include "pwtsp/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace pwtsp {

namespace {

constexpr double kCanvas = 1000.0;
constexpr double kMargin = 0.05 * kCanvas;

class Projection {
 public:
  explicit Projection(const PointSet& points) {
    double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x;
    double min_y = min_x, max_y = -min_x;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto [x, y] = raw(points[i]);
      min_x = std::min(min_x, x);
      max_x = std::max(max_x, x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
    if (points.empty()) min_x = max_x = min_y = max_y = 0.0;
    const double span = std::max(max_x - min_x, max_y - min_y);
    scale_ = span > 0.0 ? (kCanvas - 2 * kMargin) / span : 0.0;
    // Center the drawing on the canvas.
    off_x_ = kMargin + ((kCanvas - 2 * kMargin) - (max_x - min_x) * scale_) / 2 - min_x * scale_;
    off_y_ = kMargin + ((kCanvas - 2 * kMargin) - (max_y - min_y) * scale_) / 2 - min_y * scale_;
  }

  std::pair<double, double> operator()(PointView p) const {
    const auto [x, y] = raw(p);
    // SVG y grows downwards.
    return {off_x_ + x * scale_, kCanvas - (off_y_ + y * scale_)};
  }

 private:
  static std::pair<double, double> raw(PointView p) {
    return {p.empty() ? 0.0 : p[0], p.size() > 1 ? p[1] : 0.0};
  }

  double scale_ = 0.0;
  double off_x_ = 0.0;
  double off_y_ = 0.0;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

void line(std::ostringstream& out, const char* cls, std::pair<double, double> a,
          std::pair<double, double> b) {
  out << "  <line class=\"" << cls << "\" x1=\"" << fmt(a.first) << "\" y1=\"" << fmt(a.second)
      << "\" x2=\"" << fmt(b.first) << "\" y2=\"" << fmt(b.second) << "\"/>\n";
}

}  // namespace

std::string render_svg(const PointSet& points, const Tree& mst, const std::vector<VertexId>& route,
                       const std::vector<bool>& highlight) {
  const Projection project(points);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" height=\"1000\" "
         "viewBox=\"0 0 1000 1000\">\n"
      << "  <style>.mst{stroke:#9ab;stroke-width:1.5}.tour{stroke:#c33;stroke-width:3}"
         ".city{fill:#222}.revisit{fill:#e80}</style>\n"
      << "  <rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
  for (const auto& e : mst.edges()) line(out, "mst", project(points[e.u]), project(points[e.v]));
  if (route.size() > 1) {
    for (std::size_t i = 0; i < route.size(); ++i) {
      line(out, "tour", project(points[route[i]]), project(points[route[(i + 1) % route.size()]]));
    }
  }
  std::vector<bool> marked(points.size(), false);
  for (std::size_t i = 0; i < route.size() && i < highlight.size(); ++i) {
    if (highlight[i]) marked[route[i]] = true;
  }
  for (std::size_t v = 0; v < points.size(); ++v) {
    const auto [x, y] = project(points[v]);
    out << "  <circle class=\"" << (marked[v] ? "city revisit" : "city") << "\" cx=\"" << fmt(x)
        << "\" cy=\"" << fmt(y) << "\" r=\"5\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace pwtsp
