#include "minklab/compact_set.hpp"

#include <algorithm>
#include <stdexcept>

#include "minklab/rng.hpp"
#include "minklab/volume.hpp"

namespace minklab {

std::string rep_name(Rep r) {
  switch (r) {
    case Rep::Points: return "points";
    case Rep::Boxes: return "boxes";
    case Rep::Intervals: return "intervals";
  }
  throw std::logic_error("rep_name: bad enum");
}

CompactSet CompactSet::points(std::vector<Point> pts) {
  if (pts.empty()) throw std::invalid_argument("compact set: empty point list");
  const int n = pts[0].dim();
  for (const auto& p : pts)
    if (p.dim() != n) throw std::invalid_argument("compact set: mixed dimensions");
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a < b; });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  CompactSet s;
  s.dim_ = n;
  s.rep_ = Rep::Points;
  s.points_ = std::move(pts);
  return s;
}

namespace {

bool box_contained(const AxisBox& inner, const AxisBox& outer) {
  for (int i = 0; i < inner.dim(); ++i)
    if (inner.lo[i] < outer.lo[i] || outer.hi[i] < inner.hi[i]) return false;
  return true;
}

}  // namespace

CompactSet CompactSet::boxes(std::vector<AxisBox> bxs) {
  if (bxs.empty()) throw std::invalid_argument("compact set: empty box list");
  const int n = bxs[0].dim();
  for (const auto& b : bxs)
    if (b.dim() != n) throw std::invalid_argument("compact set: mixed dimensions");
  std::sort(bxs.begin(), bxs.end());
  bxs.erase(std::unique(bxs.begin(), bxs.end()), bxs.end());
  if (bxs.size() <= 512) {
    // Drop boxes contained in another; the union is unchanged and average()
    // iterates stay smaller. Quadratic, so only at moderate counts.
    std::vector<AxisBox> kept;
    for (size_t i = 0; i < bxs.size(); ++i) {
      bool dominated = false;
      for (size_t j = 0; j < bxs.size() && !dominated; ++j)
        if (i != j && box_contained(bxs[i], bxs[j]) && !(bxs[i] == bxs[j]))
          dominated = true;
      if (!dominated) kept.push_back(bxs[i]);
    }
    bxs = std::move(kept);
  }
  CompactSet s;
  s.dim_ = n;
  s.rep_ = Rep::Boxes;
  s.boxes_ = std::move(bxs);
  return s;
}

CompactSet CompactSet::intervals(std::vector<Interval> ivs) {
  if (ivs.empty()) throw std::invalid_argument("compact set: empty interval list");
  CompactSet s;
  s.dim_ = 1;
  s.rep_ = Rep::Intervals;
  s.intervals_ = interval_union_components(std::move(ivs));
  return s;
}

size_t CompactSet::piece_count() const {
  switch (rep_) {
    case Rep::Points: return points_.size();
    case Rep::Boxes: return boxes_.size();
    case Rep::Intervals: return intervals_.size();
  }
  throw std::logic_error("piece_count: bad enum");
}

std::vector<Point> CompactSet::generator_vertices() const {
  std::vector<Point> out;
  switch (rep_) {
    case Rep::Points:
      out = points_;
      break;
    case Rep::Boxes:
      for (const auto& b : boxes_) {
        // Product of per-axis distinct endpoint values; degenerate axes do
        // not double the corner count.
        std::vector<std::vector<Rational>> partial{{}};
        for (int i = 0; i < b.dim(); ++i) {
          std::vector<std::vector<Rational>> next;
          for (const auto& pre : partial) {
            auto with = pre;
            with.push_back(b.lo[i]);
            next.push_back(with);
            if (b.lo[i] != b.hi[i]) {
              auto with2 = pre;
              with2.push_back(b.hi[i]);
              next.push_back(with2);
            }
          }
          partial = std::move(next);
        }
        for (auto& coords : partial) out.push_back(Point(std::move(coords)));
      }
      break;
    case Rep::Intervals:
      for (const auto& iv : intervals_) {
        out.push_back(Point(std::vector<Rational>{iv.lo}));
        out.push_back(Point(std::vector<Rational>{iv.hi}));
      }
      break;
  }
  std::sort(out.begin(), out.end(), [](const Point& a, const Point& b) { return a < b; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

AxisBox CompactSet::bounding_box() const {
  auto verts = generator_vertices();
  Point lo = verts[0], hi = verts[0];
  for (const auto& v : verts)
    for (int i = 0; i < dim_; ++i) {
      if (v[i] < lo[i]) lo[i] = v[i];
      if (hi[i] < v[i]) hi[i] = v[i];
    }
  return AxisBox(std::move(lo), std::move(hi));
}

Rational CompactSet::volume() const {
  switch (rep_) {
    case Rep::Points: return Rational(0);
    case Rep::Boxes: return box_union_volume(boxes_);
    case Rep::Intervals: {
      Rational v;
      for (const auto& iv : intervals_) v += iv.length();
      return v;
    }
  }
  throw std::logic_error("volume: bad enum");
}

namespace {

std::vector<AxisBox> points_as_boxes(const std::vector<Point>& pts) {
  std::vector<AxisBox> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.emplace_back(p, p);
  return out;
}

}  // namespace

std::vector<Interval> as_intervals_1d(const CompactSet& s) {
  if (s.dim() != 1) throw std::invalid_argument("as_intervals_1d: set is not 1-D");
  std::vector<Interval> out;
  switch (s.rep()) {
    case Rep::Intervals: return s.interval_data();
    case Rep::Points:
      for (const auto& p : s.point_data()) out.emplace_back(p[0], p[0]);
      return out;
    case Rep::Boxes:
      for (const auto& b : s.box_data()) out.emplace_back(b.lo[0], b.hi[0]);
      return out;
  }
  throw std::logic_error("as_intervals_1d: bad enum");
}

CompactSet minkowski_sum(const CompactSet& a, const CompactSet& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("minkowski sum: dimension mismatch");

  if (a.rep() == Rep::Points && b.rep() == Rep::Points) {
    std::vector<Point> out;
    out.reserve(a.point_data().size() * b.point_data().size());
    for (const auto& p : a.point_data())
      for (const auto& q : b.point_data()) out.push_back(add(p, q));
    return CompactSet::points(std::move(out));
  }

  if (a.rep() == Rep::Intervals || b.rep() == Rep::Intervals) {
    // 1-D by construction; promote the other operand.
    auto ia = as_intervals_1d(a);
    auto ib = as_intervals_1d(b);
    std::vector<Interval> out;
    out.reserve(ia.size() * ib.size());
    for (const auto& u : ia)
      for (const auto& v : ib) out.emplace_back(u.lo + v.lo, u.hi + v.hi);
    return CompactSet::intervals(std::move(out));
  }

  // Remaining combinations involve boxes; points become degenerate boxes.
  const auto ba = a.rep() == Rep::Boxes ? a.box_data() : points_as_boxes(a.point_data());
  const auto bb = b.rep() == Rep::Boxes ? b.box_data() : points_as_boxes(b.point_data());
  std::vector<AxisBox> out;
  out.reserve(ba.size() * bb.size());
  for (const auto& u : ba)
    for (const auto& v : bb) out.push_back(add(u, v));
  return CompactSet::boxes(std::move(out));
}

CompactSet scale(const CompactSet& a, const Rational& t) {
  if (t.sign() <= 0) throw std::invalid_argument("scale: factor must be positive");
  switch (a.rep()) {
    case Rep::Points: {
      std::vector<Point> out = a.point_data();
      for (auto& p : out) p = scale(p, t);
      return CompactSet::points(std::move(out));
    }
    case Rep::Boxes: {
      std::vector<AxisBox> out;
      out.reserve(a.box_data().size());
      for (const auto& b : a.box_data()) out.push_back(scale(b, t));
      auto s = CompactSet::boxes(std::move(out));
      if (a.cross_tag()) {
        CrossSpec c = *a.cross_tag();
        c.side1 = c.side1 * t;
        c.side2 = c.side2 * t;
        s.cross_ = c;
      }
      return s;
    }
    case Rep::Intervals: {
      std::vector<Interval> out;
      out.reserve(a.interval_data().size());
      for (const auto& iv : a.interval_data()) out.emplace_back(iv.lo * t, iv.hi * t);
      return CompactSet::intervals(std::move(out));
    }
  }
  throw std::logic_error("scale: bad enum");
}

CompactSet average(const CompactSet& a, int k) {
  if (k < 1) throw std::invalid_argument("average: k must be >= 1");
  if (k == 1) return a;
  CompactSet sum = a;
  for (int i = 2; i <= k; ++i) sum = minkowski_sum(sum, a);
  return scale(sum, Rational(1, k));
}

CompactSet cross_build(const CrossSpec& spec) {
  if (spec.n < 2 || spec.p < 1 || spec.p > spec.n - 1)
    throw std::invalid_argument("cross: need 1 <= p <= n-1 and n >= 2");
  if (spec.side1.sign() <= 0 || spec.side2.sign() <= 0)
    throw std::invalid_argument("cross: sides must be positive");

  std::vector<Rational> lo(static_cast<size_t>(spec.n), Rational(0));
  std::vector<Rational> hi1 = lo, hi2 = lo;
  for (int i = 0; i < spec.p; ++i) hi1[static_cast<size_t>(i)] = spec.side1;
  for (int i = spec.p; i < spec.n; ++i) hi2[static_cast<size_t>(i)] = spec.side2;

  auto s = CompactSet::boxes({AxisBox(Point(lo), Point(hi1)), AxisBox(Point(lo), Point(hi2))});
  s.cross_ = spec;
  return s;
}

CompactSet gallery(const std::string& name, const Rational& param) {
  if (name == "scaled_segment_pair") {
    if (param.sign() <= 0) throw std::invalid_argument("gallery: parameter must be positive");
    return CompactSet::points({Point({Rational(0)}), Point({param})});
  }
  if (name == "finite_grid") {
    if (param.sign() <= 0) throw std::invalid_argument("gallery: parameter must be positive");
    const Rational inv = param.reciprocal();
    if (!inv.is_integer() || inv < Rational(1))
      throw std::invalid_argument("gallery: finite_grid spacing must be 1/m for a positive integer m");
    const long m = std::stol(inv.str());
    std::vector<Point> pts;
    pts.reserve(static_cast<size_t>((m + 1) * (m + 1)));
    for (long i = 0; i <= m; ++i)
      for (long j = 0; j <= m; ++j)
        pts.push_back(Point({Rational(i) * param, Rational(j) * param}));
    return CompactSet::points(std::move(pts));
  }
  if (name == "three_point") {
    if (param.sign() <= 0) throw std::invalid_argument("gallery: parameter must be positive");
    return CompactSet::points({Point({Rational(0), Rational(0)}),
                               Point({param, Rational(0)}),
                               Point({Rational(0), Rational(1)})});
  }
  throw std::invalid_argument("gallery: unknown name \"" + name + "\"");
}

CompactSet random_set(int dim, Rep rep, int size, uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("random_set: dim must be >= 1");
  if (size < 1) throw std::invalid_argument("random_set: size must be >= 1");
  if (rep == Rep::Intervals && dim != 1)
    throw std::invalid_argument("random_set: intervals require dim = 1");

  DetRng rng(seed);
  switch (rep) {
    case Rep::Points: {
      std::vector<Point> pts;
      pts.reserve(static_cast<size_t>(size));
      for (int s = 0; s < size; ++s) {
        std::vector<Rational> coords;
        coords.reserve(static_cast<size_t>(dim));
        for (int i = 0; i < dim; ++i) coords.push_back(rng.rational(64, 4));
        pts.push_back(Point(std::move(coords)));
      }
      return CompactSet::points(std::move(pts));
    }
    case Rep::Boxes: {
      std::vector<AxisBox> bxs;
      bxs.reserve(static_cast<size_t>(size));
      for (int s = 0; s < size; ++s) {
        std::vector<Rational> lo, hi;
        lo.reserve(static_cast<size_t>(dim));
        hi.reserve(static_cast<size_t>(dim));
        for (int i = 0; i < dim; ++i) {
          Rational l = rng.rational(64, 4);
          Rational w = rng.nonneg_rational(64, 2);
          lo.push_back(l);
          hi.push_back(l + w);
        }
        bxs.emplace_back(Point(std::move(lo)), Point(std::move(hi)));
      }
      return CompactSet::boxes(std::move(bxs));
    }
    case Rep::Intervals: {
      std::vector<Interval> ivs;
      ivs.reserve(static_cast<size_t>(size));
      for (int s = 0; s < size; ++s) {
        Rational l = rng.rational(64, 4);
        Rational w = rng.nonneg_rational(64, 2);
        ivs.emplace_back(l, l + w);
      }
      return CompactSet::intervals(std::move(ivs));
    }
  }
  throw std::logic_error("random_set: bad enum");
}

namespace {

bool box_union_contains(const std::vector<AxisBox>& boxes, const Point& p) {
  for (const auto& b : boxes)
    if (b.contains(p)) return true;
  return false;
}

// Corners plus centers of every box: the probe points for the sampling half
// of box-union equality.
std::vector<Point> probe_points(const CompactSet& s) {
  std::vector<Point> pts = s.generator_vertices();
  for (const auto& b : s.box_data()) {
    std::vector<Rational> mid;
    mid.reserve(static_cast<size_t>(b.dim()));
    for (int i = 0; i < b.dim(); ++i) mid.push_back((b.lo[i] + b.hi[i]) / Rational(2));
    pts.push_back(Point(std::move(mid)));
  }
  return pts;
}

}  // namespace

bool set_equal(const CompactSet& a, const CompactSet& b) {
  if (a.dim() != b.dim()) return false;

  if (a.dim() == 1) {
    // Everything 1-D compares exactly through merged interval components.
    return interval_union_components(as_intervals_1d(a)) ==
           interval_union_components(as_intervals_1d(b));
  }

  if (a.rep() == Rep::Points && b.rep() == Rep::Points)
    return a.point_data() == b.point_data();  // both canonical

  if (a.rep() == Rep::Points || b.rep() == Rep::Points) {
    const CompactSet& pts = a.rep() == Rep::Points ? a : b;
    const CompactSet& other = a.rep() == Rep::Points ? b : a;
    // A finite point set equals a box union only if every box is a point.
    std::vector<Point> collapsed;
    for (const auto& bx : other.box_data()) {
      if (!(bx.lo == bx.hi)) return false;
      collapsed.push_back(bx.lo);
    }
    return CompactSet::points(std::move(collapsed)).point_data() == pts.point_data();
  }

  // Boxes vs boxes: zero symmetric-difference volume, then exact containment
  // of probe points both ways to cover measure-zero pieces. Sampling, not a
  // decision procedure; documented contract.
  std::vector<AxisBox> all = a.box_data();
  all.insert(all.end(), b.box_data().begin(), b.box_data().end());
  const Rational vol_union = box_union_volume(all);
  const Rational symdiff = (vol_union - a.volume()) + (vol_union - b.volume());
  if (!symdiff.is_zero()) return false;

  for (const auto& p : probe_points(a))
    if (!box_union_contains(b.box_data(), p)) return false;
  for (const auto& p : probe_points(b))
    if (!box_union_contains(a.box_data(), p)) return false;
  return true;
}

}  // namespace minklab
