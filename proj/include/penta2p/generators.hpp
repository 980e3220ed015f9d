#pragma once

#include <array>

#include "penta2p/plane_map.hpp"

namespace penta2p {

/// Plane graph whose faces are all pentagons except one designated outer
/// triangle. `outer` is ordered (x, y, z) so that the outer face of `map` is
/// traversed x -> z -> y; planting then sends (x, y, z) to a host triangle
/// in its own traversal order.
struct Gadget {
  PlaneMap map;
  std::array<Vertex, 3> outer{};

  /// Vertices off the outer triangle, in increasing id order.
  std::vector<Vertex> interior() const;
};

/// Throws BadGadget when the face structure or outer orientation is wrong.
void validate_gadget(const Gadget& g);

/// Skeleton of the order-20 optimal 2-planar drawing, from its straight-line
/// coordinates. Vertex i here is node i+1 of the source drawing.
PlaneMap dodecahedron();

/// Two concentric s-cycles joined by a perfect matching; outer cycle 0..s-1.
PlaneMap prism(int s);

/// K4 grown by repeatedly inserting a vertex of degree three into face 0.
PlaneMap stacked_triangulation(int l);

/// 25-vertex, 39-edge gadget: 15 pentagons inside a triangle.
Gadget gadget_h();

/// 28-vertex, 44-edge gadget with 25 interior vertices.
Gadget gadget_f();

/// Plants a copy of `gadget` into every face of stacked_triangulation(l).
/// Base triangulation vertices keep ids 0..l-1 and are recorded as the
/// frame; the interior of the copy in face f follows in gadget id order.
PlaneMap theorem2_pentagulation(int l, const Gadget& gadget);

}  // namespace penta2p
