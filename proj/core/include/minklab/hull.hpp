#pragma once

#include <vector>

#include "minklab/geom.hpp"

namespace minklab {

// Convex hull of a nonempty 1-D coordinate list: [min, max].
Interval hull_1d(const std::vector<Rational>& xs);

// 2-D hull result. Collinear input is first class, not an error: the cross
// construction produces measure-zero pieces, and callers fall back to a 1-D
// treatment along the carrier line.
struct Hull2D {
  bool degenerate = false;
  std::vector<Point> vertices;  // CCW, strictly convex, when !degenerate
  Point segment_a, segment_b;   // carrier segment endpoints when degenerate
                                // (equal for a single point)
};

Hull2D hull_2d(const std::vector<Point>& pts);

// orient(a,b,c) > 0 iff c lies strictly left of the directed line a->b.
Rational orient2d(const Point& a, const Point& b, const Point& c);

// Exact test for x in conv(pts) in any dimension, boundary inclusive.
// Decided by rational linear feasibility on the convex-combination system.
bool hull_membership(const Point& x, const std::vector<Point>& pts);

// Boundary-inclusive containment in a CCW strictly convex polygon.
bool point_in_convex_polygon(const Point& p, const std::vector<Point>& ccw_vertices);

}  // namespace minklab
