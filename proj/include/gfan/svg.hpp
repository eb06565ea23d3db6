#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gfan/cone.hpp"
#include "gfan/tau_tilting.hpp"

namespace gfan {

/// The affine plane a.x = d, written "a1,a2,a3=d".
struct PlaneSpec {
  QVector normal;
  Rational offset;
};

/// Throws ParseError.
PlaneSpec parse_plane(const std::string& text);

using Point2 = std::pair<double, double>;

struct SlicePolygon {
  std::size_t chamber = 0;
  std::vector<Point2> vertices;  // counterclockwise, in plane coordinates
};

struct SliceSegment {
  Point2 a, b;
};

struct FanSlice {
  double half_width = 0;
  std::vector<SlicePolygon> chambers;
  std::vector<SliceSegment> walls;  // deduplicated chamber edges not on the viewport
};

/// Intersects every chamber with the plane and clips to a square viewport of
/// the given half width centred on the point of the plane closest to 0.
/// Only three-dimensional fans are supported.
FanSlice slice_fan(const ChamberFan& fan, const PlaneSpec& plane, double half_width = 3.0);

std::string render_svg(const FanSlice& slice, int pixels = 480);

}  // namespace gfan
