#pragma once

#include <vector>

#include "minklab/geom.hpp"
#include "minklab/hull.hpp"

namespace minklab {

// Strictly convex polygon, CCW, at least 3 vertices, no three consecutive
// collinear. Construction validates.
class Polygon2 {
 public:
  explicit Polygon2(std::vector<Point> ccw_vertices);

  const std::vector<Point>& vertices() const { return v_; }
  size_t size() const { return v_.size(); }

  Rational area() const;  // shoelace, exact
  bool contains(const Point& p) const { return point_in_convex_polygon(p, v_); }

 private:
  std::vector<Point> v_;
};

Polygon2 translate(const Polygon2& p, const Point& by);
Polygon2 scale(const Polygon2& p, const Rational& t);  // t > 0

// Finite union of convex polygons; overlaps allowed. Area is the measure of
// the union, never the sum of parts.
struct PolySet2 {
  std::vector<Polygon2> parts;
};

// Exact area of the union. Vertical slab decomposition: cut at every vertex
// abscissa and every pairwise edge crossing; inside a slab each part's
// section is a y-interval with linear endpoints and a fixed merge structure,
// so the union length is linear in x and one midpoint evaluation per slab
// integrates it exactly.
Rational polyset2_area(const PolySet2& s);

// Minkowski sum of convex sets given by their vertices (any count >= 1).
// Result is the hull of pairwise sums; degenerate results are reported
// through Hull2D.
Hull2D convex_minkowski_sum_2d(const std::vector<Point>& a, const std::vector<Point>& b);

}  // namespace minklab
