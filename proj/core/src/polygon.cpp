#include "minklab/polygon.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "minklab/volume.hpp"

namespace minklab {

Polygon2::Polygon2(std::vector<Point> ccw_vertices) : v_(std::move(ccw_vertices)) {
  if (v_.size() < 3) throw std::invalid_argument("polygon: needs at least 3 vertices");
  for (const auto& p : v_)
    if (p.dim() != 2) throw std::invalid_argument("polygon: vertices must be 2-D");
  const size_t n = v_.size();
  for (size_t i = 0; i < n; ++i) {
    if (orient2d(v_[i], v_[(i + 1) % n], v_[(i + 2) % n]).sign() <= 0)
      throw std::invalid_argument("polygon: not strictly convex CCW");
  }
}

Rational Polygon2::area() const {
  Rational twice;
  const size_t n = v_.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& a = v_[i];
    const Point& b = v_[(i + 1) % n];
    twice += a[0] * b[1] - b[0] * a[1];
  }
  return twice / Rational(2);
}

Polygon2 translate(const Polygon2& p, const Point& by) {
  std::vector<Point> v = p.vertices();
  for (auto& q : v) q = add(q, by);
  return Polygon2(std::move(v));
}

Polygon2 scale(const Polygon2& p, const Rational& t) {
  if (t.sign() <= 0) throw std::invalid_argument("polygon scale: factor must be positive");
  std::vector<Point> v = p.vertices();
  for (auto& q : v) q = scale(q, t);
  return Polygon2(std::move(v));
}

namespace {

struct XRange {
  Rational lo, hi;
};

XRange x_range(const Polygon2& p) {
  XRange r{p.vertices()[0][0], p.vertices()[0][0]};
  for (const auto& v : p.vertices()) {
    if (v[0] < r.lo) r.lo = v[0];
    if (r.hi < v[0]) r.hi = v[0];
  }
  return r;
}

// x-coordinate of the single crossing of two segments, if any. Parallel and
// collinear pairs are skipped: their relevant abscissae are segment
// endpoints, which the caller already collects.
std::optional<Rational> segment_crossing_x(const Point& p1, const Point& p2,
                                           const Point& q1, const Point& q2) {
  const Rational d1x = p2[0] - p1[0], d1y = p2[1] - p1[1];
  const Rational d2x = q2[0] - q1[0], d2y = q2[1] - q1[1];
  const Rational den = d1x * d2y - d1y * d2x;
  if (den.is_zero()) return std::nullopt;
  const Rational ex = q1[0] - p1[0], ey = q1[1] - p1[1];
  const Rational t = (ex * d2y - ey * d2x) / den;
  const Rational u = (ex * d1y - ey * d1x) / den;
  const Rational zero(0), one(1);
  if (t < zero || one < t || u < zero || one < u) return std::nullopt;
  return p1[0] + t * d1x;
}

// y-interval of a convex polygon at abscissa xm, which must be strictly
// between two consecutive vertex abscissae of the polygon.
Interval section_at(const Polygon2& poly, const Rational& xm) {
  const auto& v = poly.vertices();
  const size_t n = v.size();
  std::optional<Rational> ylo, yhi;
  for (size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    const Rational& xa = a[0];
    const Rational& xb = b[0];
    if ((xa < xm && xm < xb) || (xb < xm && xm < xa)) {
      Rational y = a[1] + (xm - xa) * (b[1] - a[1]) / (xb - xa);
      if (!ylo || y < *ylo) ylo = y;
      if (!yhi || *yhi < y) yhi = y;
    }
  }
  if (!ylo) throw std::logic_error("polygon section: abscissa outside polygon");
  return Interval(*ylo, *yhi);
}

}  // namespace

Rational polyset2_area(const PolySet2& s) {
  if (s.parts.empty()) return Rational(0);

  std::vector<Rational> cuts;
  for (const auto& part : s.parts)
    for (const auto& v : part.vertices()) cuts.push_back(v[0]);

  // Pairwise edge crossings between distinct parts; edges of one convex part
  // only meet at shared vertices, already collected above.
  for (size_t i = 0; i < s.parts.size(); ++i) {
    const auto& vi = s.parts[i].vertices();
    for (size_t j = i + 1; j < s.parts.size(); ++j) {
      const auto& vj = s.parts[j].vertices();
      for (size_t e = 0; e < vi.size(); ++e)
        for (size_t f = 0; f < vj.size(); ++f) {
          auto x = segment_crossing_x(vi[e], vi[(e + 1) % vi.size()],
                                      vj[f], vj[(f + 1) % vj.size()]);
          if (x) cuts.push_back(*x);
        }
    }
  }

  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<XRange> ranges;
  ranges.reserve(s.parts.size());
  for (const auto& part : s.parts) ranges.push_back(x_range(part));

  Rational total;
  std::vector<Interval> sections;
  for (size_t j = 0; j + 1 < cuts.size(); ++j) {
    const Rational& x0 = cuts[j];
    const Rational& x1 = cuts[j + 1];
    const Rational xm = (x0 + x1) / Rational(2);
    sections.clear();
    for (size_t i = 0; i < s.parts.size(); ++i) {
      if (ranges[i].lo <= x0 && x1 <= ranges[i].hi)
        sections.push_back(section_at(s.parts[i], xm));
    }
    if (sections.empty()) continue;
    total += (x1 - x0) * interval_union_measure(std::move(sections));
  }
  return total;
}

Hull2D convex_minkowski_sum_2d(const std::vector<Point>& a, const std::vector<Point>& b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("minkowski sum: empty operand");
  std::vector<Point> sums;
  sums.reserve(a.size() * b.size());
  for (const auto& p : a)
    for (const auto& q : b) sums.push_back(add(p, q));
  return hull_2d(sums);
}

}  // namespace minklab
