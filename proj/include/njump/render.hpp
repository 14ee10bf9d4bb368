#pragma once

#include "njump/geometry.hpp"
#include "njump/types.hpp"

#include <string>

namespace njump {

// Flat drawing of a two-dimensional diagram: axes, the shaded gamma-minus
// region, the diagram chain and the support points.
std::string render_svg(const NewtonDiagram& d, const Support& s);

// Wavefront OBJ mesh of the boundary of the gamma-minus solid of a
// three-dimensional convenient diagram: the diagram facets plus the three
// coordinate-plane walls.
std::string render_obj(const NewtonDiagram& d);

} // namespace njump
