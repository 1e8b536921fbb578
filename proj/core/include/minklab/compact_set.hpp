#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minklab/geom.hpp"

namespace minklab {

enum class Rep { Points, Boxes, Intervals };

std::string rep_name(Rep r);

// Parameters of the two-box cross: [0,side1]^p x {0}^(n-p) union
// {0}^p x [0,side2]^(n-p). The two factors live in complementary coordinate
// subspaces; fixing them to the leading/trailing axes loses no generality
// because all three non-convexity measures checked on crosses are invariant
// under that change of basis.
struct CrossSpec {
  int n = 0;
  int p = 0;
  Rational side1, side2;
};

// Finitely described compact subset of R^n: a finite point cloud, a finite
// union of axis boxes, or a finite union of intervals (n = 1). Values are
// immutable; every operation returns a new set. Canonical storage: points
// sorted and deduplicated, intervals merged into disjoint components, boxes
// sorted with exact duplicates removed (box lists are NOT a normal form for
// the set they cover; see set_equal).
class CompactSet {
 public:
  static CompactSet points(std::vector<Point> pts);
  static CompactSet boxes(std::vector<AxisBox> bxs);
  static CompactSet intervals(std::vector<Interval> ivs);

  int dim() const { return dim_; }
  Rep rep() const { return rep_; }

  const std::vector<Point>& point_data() const { return points_; }
  const std::vector<AxisBox>& box_data() const { return boxes_; }
  const std::vector<Interval>& interval_data() const { return intervals_; }

  size_t piece_count() const;

  // Generating vertices: the points themselves, box corners, or interval
  // endpoints. conv(A) equals the hull of these.
  std::vector<Point> generator_vertices() const;

  AxisBox bounding_box() const;

  // Exact n-dimensional Lebesgue measure of the set.
  Rational volume() const;

  // Provenance tag set by cross_build; lets measure code use the analytic
  // hull volume of the cross.
  const std::optional<CrossSpec>& cross_tag() const { return cross_; }

 private:
  int dim_ = 0;
  Rep rep_ = Rep::Points;
  std::vector<Point> points_;
  std::vector<AxisBox> boxes_;
  std::vector<Interval> intervals_;
  std::optional<CrossSpec> cross_;

  friend CompactSet cross_build(const CrossSpec& spec);
};

// Exact Minkowski sum. Same dimension required. Points+Points, Boxes+Boxes,
// Intervals+Intervals directly; mixed pairs promote points (and, in 1-D,
// boxes) to the richer representation.
CompactSet minkowski_sum(const CompactSet& a, const CompactSet& b);

// {t a : a in A}, t > 0.
CompactSet scale(const CompactSet& a, const Rational& t);

// Minkowski average A(k) = (A + ... + A)/k, exact, deduplicated.
CompactSet average(const CompactSet& a, int k);

CompactSet cross_build(const CrossSpec& spec);

// Named generator families:
//   scaled_segment_pair(t): the 1-D two-point set {0, t}, t > 0. Scaling
//     back to {0,1} shows c invariant while delta and d shrink with t.
//   finite_grid(h): all (i h, j h) in [0,1]^2; needs 1/h a positive integer.
//   three_point(eps): {(0,0), (eps,0), (0,1)}, eps > 0.
CompactSet gallery(const std::string& name, const Rational& param);

// Deterministic instance generation; same (dim, rep, size, seed) gives the
// same set on every platform. Coordinates have denominators in {1..64} and
// lie in [-4, 4]; box/interval widths lie in [0, 2].
CompactSet random_set(int dim, Rep rep, int size, uint64_t seed);

// Semantic set equality. Points/Intervals: canonical forms compared exactly.
// Boxes: symmetric-difference volume zero plus exact containment of sampled
// corner points both ways (covers degenerate, measure-zero pieces).
bool set_equal(const CompactSet& a, const CompactSet& b);

// Any 1-D set as a list of (possibly degenerate) intervals.
std::vector<Interval> as_intervals_1d(const CompactSet& s);

}  // namespace minklab
