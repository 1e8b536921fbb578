#pragma once

#include <vector>

#include "minklab/rational.hpp"

namespace minklab {

struct Point {
  std::vector<Rational> x;

  Point() = default;
  explicit Point(std::vector<Rational> coords);

  int dim() const { return static_cast<int>(x.size()); }
  const Rational& operator[](int i) const { return x[static_cast<size_t>(i)]; }
  Rational& operator[](int i) { return x[static_cast<size_t>(i)]; }
};

bool operator==(const Point& a, const Point& b);
bool operator<(const Point& a, const Point& b);  // lexicographic, for canonical ordering

Point add(const Point& a, const Point& b);
Point sub(const Point& a, const Point& b);
Point scale(const Point& p, const Rational& t);
Rational dot(const Point& a, const Point& b);
Rational squared_distance(const Point& a, const Point& b);

// Axis-aligned box, lo[i] <= hi[i]; degenerate faces allowed (volume 0).
struct AxisBox {
  Point lo, hi;

  AxisBox() = default;
  AxisBox(Point lo_, Point hi_);

  int dim() const { return lo.dim(); }
  Rational volume() const;
  bool is_degenerate() const;  // some side has zero width
  bool contains(const Point& p) const;
};

bool operator==(const AxisBox& a, const AxisBox& b);
bool operator<(const AxisBox& a, const AxisBox& b);

AxisBox add(const AxisBox& a, const AxisBox& b);            // Minkowski sum of boxes
AxisBox scale(const AxisBox& b, const Rational& t);         // t > 0
std::vector<Point> corners(const AxisBox& b);               // 2^dim points

// Closed interval lo <= hi on the line.
struct Interval {
  Rational lo, hi;

  Interval() = default;
  Interval(Rational lo_, Rational hi_);

  Rational length() const { return hi - lo; }
};

bool operator==(const Interval& a, const Interval& b);
bool operator<(const Interval& a, const Interval& b);

Rational squared_point_box_distance(const Point& p, const AxisBox& b);

}  // namespace minklab
