#include "minklab/hull.hpp"

#include <algorithm>
#include <stdexcept>

#include "minklab/lp.hpp"

namespace minklab {

Interval hull_1d(const std::vector<Rational>& xs) {
  if (xs.empty()) throw std::invalid_argument("hull_1d: empty set");
  Rational lo = xs[0], hi = xs[0];
  for (const auto& v : xs) {
    if (v < lo) lo = v;
    if (hi < v) hi = v;
  }
  return Interval(lo, hi);
}

Rational orient2d(const Point& a, const Point& b, const Point& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

Hull2D hull_2d(const std::vector<Point>& pts) {
  if (pts.empty()) throw std::invalid_argument("hull_2d: empty set");
  for (const auto& p : pts)
    if (p.dim() != 2) throw std::invalid_argument("hull_2d: dimension must be 2");

  std::vector<Point> s = pts;
  std::sort(s.begin(), s.end(), [](const Point& a, const Point& b) { return a < b; });
  s.erase(std::unique(s.begin(), s.end()), s.end());

  Hull2D out;
  bool collinear = true;
  for (size_t i = 2; i < s.size() && collinear; ++i)
    if (!orient2d(s[0], s[1], s[i]).is_zero()) collinear = false;
  if (s.size() < 3 || collinear) {
    out.degenerate = true;
    out.segment_a = s.front();  // lexicographic extremes span the carrier segment
    out.segment_b = s.back();
    return out;
  }

  // Monotone chain; strict turns only, so no three consecutive collinear
  // vertices survive.
  std::vector<Point> lower, upper;
  for (const auto& p : s) {
    while (lower.size() >= 2 &&
           orient2d(lower[lower.size() - 2], lower.back(), p).sign() <= 0)
      lower.pop_back();
    lower.push_back(p);
  }
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    while (upper.size() >= 2 &&
           orient2d(upper[upper.size() - 2], upper.back(), *it).sign() <= 0)
      upper.pop_back();
    upper.push_back(*it);
  }
  lower.pop_back();
  upper.pop_back();
  out.vertices = std::move(lower);
  out.vertices.insert(out.vertices.end(), upper.begin(), upper.end());
  return out;
}

bool hull_membership(const Point& x, const std::vector<Point>& pts) {
  if (pts.empty()) throw std::invalid_argument("hull_membership: empty point set");
  const int n = x.dim();
  for (const auto& p : pts)
    if (p.dim() != n) throw std::invalid_argument("hull_membership: dimension mismatch");

  // lambda >= 0, sum lambda = 1, sum lambda p_i = x.
  const size_t m = pts.size();
  std::vector<std::vector<Rational>> a(static_cast<size_t>(n) + 1,
                                       std::vector<Rational>(m));
  std::vector<Rational> b(static_cast<size_t>(n) + 1);
  for (size_t j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) a[static_cast<size_t>(i)][j] = pts[j][i];
    a[static_cast<size_t>(n)][j] = Rational(1);
  }
  for (int i = 0; i < n; ++i) b[static_cast<size_t>(i)] = x[i];
  b[static_cast<size_t>(n)] = Rational(1);
  return solve_standard_form_feasibility(a, b).has_value();
}

bool point_in_convex_polygon(const Point& p, const std::vector<Point>& v) {
  const size_t n = v.size();
  if (n < 3) throw std::invalid_argument("point_in_convex_polygon: not a polygon");
  for (size_t i = 0; i < n; ++i)
    if (orient2d(v[i], v[(i + 1) % n], p).sign() < 0) return false;
  return true;
}

}  // namespace minklab
