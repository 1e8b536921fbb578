#include "minklab/geom.hpp"

#include <stdexcept>

namespace minklab {

Point::Point(std::vector<Rational> coords) : x(std::move(coords)) {
  if (x.empty()) throw std::invalid_argument("point: dimension must be >= 1");
}

bool operator==(const Point& a, const Point& b) {
  if (a.x.size() != b.x.size()) return false;
  for (size_t i = 0; i < a.x.size(); ++i)
    if (a.x[i] != b.x[i]) return false;
  return true;
}

bool operator<(const Point& a, const Point& b) {
  if (a.x.size() != b.x.size())
    return a.x.size() < b.x.size();
  for (size_t i = 0; i < a.x.size(); ++i) {
    if (a.x[i] < b.x[i]) return true;
    if (b.x[i] < a.x[i]) return false;
  }
  return false;
}

static void require_same_dim(const Point& a, const Point& b) {
  if (a.x.size() != b.x.size()) throw std::invalid_argument("point: dimension mismatch");
}

Point add(const Point& a, const Point& b) {
  require_same_dim(a, b);
  Point r = a;
  for (size_t i = 0; i < r.x.size(); ++i) r.x[i] += b.x[i];
  return r;
}

Point sub(const Point& a, const Point& b) {
  require_same_dim(a, b);
  Point r = a;
  for (size_t i = 0; i < r.x.size(); ++i) r.x[i] -= b.x[i];
  return r;
}

Point scale(const Point& p, const Rational& t) {
  Point r = p;
  for (auto& c : r.x) c *= t;
  return r;
}

Rational dot(const Point& a, const Point& b) {
  require_same_dim(a, b);
  Rational s;
  for (size_t i = 0; i < a.x.size(); ++i) s += a.x[i] * b.x[i];
  return s;
}

Rational squared_distance(const Point& a, const Point& b) {
  require_same_dim(a, b);
  Rational s;
  for (size_t i = 0; i < a.x.size(); ++i) {
    Rational d = a.x[i] - b.x[i];
    s += d * d;
  }
  return s;
}

AxisBox::AxisBox(Point lo_, Point hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo.x.size() != hi.x.size()) throw std::invalid_argument("box: dimension mismatch");
  for (size_t i = 0; i < lo.x.size(); ++i)
    if (hi.x[i] < lo.x[i]) throw std::invalid_argument("box: lo > hi on axis " + std::to_string(i));
}

Rational AxisBox::volume() const {
  Rational v(1);
  for (size_t i = 0; i < lo.x.size(); ++i) v *= hi.x[i] - lo.x[i];
  return v;
}

bool AxisBox::is_degenerate() const {
  for (size_t i = 0; i < lo.x.size(); ++i)
    if (lo.x[i] == hi.x[i]) return true;
  return false;
}

bool AxisBox::contains(const Point& p) const {
  if (p.dim() != dim()) throw std::invalid_argument("box: dimension mismatch");
  for (size_t i = 0; i < lo.x.size(); ++i)
    if (p.x[i] < lo.x[i] || hi.x[i] < p.x[i]) return false;
  return true;
}

bool operator==(const AxisBox& a, const AxisBox& b) { return a.lo == b.lo && a.hi == b.hi; }

bool operator<(const AxisBox& a, const AxisBox& b) {
  if (a.lo < b.lo) return true;
  if (b.lo < a.lo) return false;
  return a.hi < b.hi;
}

AxisBox add(const AxisBox& a, const AxisBox& b) {
  return AxisBox(add(a.lo, b.lo), add(a.hi, b.hi));
}

AxisBox scale(const AxisBox& b, const Rational& t) {
  if (t.sign() <= 0) throw std::invalid_argument("box scale: factor must be positive");
  return AxisBox(scale(b.lo, t), scale(b.hi, t));
}

std::vector<Point> corners(const AxisBox& b) {
  const int n = b.dim();
  std::vector<Point> out;
  out.reserve(static_cast<size_t>(1) << n);
  std::vector<Rational> cur(static_cast<size_t>(n));
  for (size_t mask = 0; mask < (static_cast<size_t>(1) << n); ++mask) {
    for (int i = 0; i < n; ++i)
      cur[static_cast<size_t>(i)] = (mask >> i) & 1 ? b.hi[i] : b.lo[i];
    out.push_back(Point(cur));
  }
  return out;
}

Interval::Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (hi < lo) throw std::invalid_argument("interval: lo > hi");
}

bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }

bool operator<(const Interval& a, const Interval& b) {
  if (a.lo < b.lo) return true;
  if (b.lo < a.lo) return false;
  return a.hi < b.hi;
}

Rational squared_point_box_distance(const Point& p, const AxisBox& b) {
  if (p.dim() != b.dim()) throw std::invalid_argument("distance: dimension mismatch");
  Rational s;
  for (size_t i = 0; i < p.x.size(); ++i) {
    if (p.x[i] < b.lo.x[i]) {
      Rational d = b.lo.x[i] - p.x[i];
      s += d * d;
    } else if (b.hi.x[i] < p.x[i]) {
      Rational d = p.x[i] - b.hi.x[i];
      s += d * d;
    }
  }
  return s;
}

}  // namespace minklab
