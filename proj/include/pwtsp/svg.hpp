#pragma once

#include <string>
#include <vector>

#include "pwtsp/geometry.hpp"
#include "pwtsp/spanning.hpp"

namespace pwtsp {

// SVG 1.1 drawing on a 1000 x 1000 viewBox with a 5% margin: one circle per
// city (class "city", plus "revisit" where highlighted), light MST strokes
// (class "mst") and one heavy stroke per route step (class "tour"), closing
// the route back to its start. Only the first two coordinates are drawn.
std::string render_svg(const PointSet& points, const Tree& mst, const std::vector<VertexId>& route,
                       const std::vector<bool>& highlight = {});

}  // namespace pwtsp
