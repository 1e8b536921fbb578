#include "minklab/volume.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace minklab {

std::vector<Interval> interval_union_components(std::vector<Interval> ivs) {
  if (ivs.empty()) return {};
  std::sort(ivs.begin(), ivs.end());
  std::vector<Interval> out;
  Interval cur = ivs.front();
  for (size_t i = 1; i < ivs.size(); ++i) {
    if (ivs[i].lo <= cur.hi) {
      if (cur.hi < ivs[i].hi) cur.hi = ivs[i].hi;
    } else {
      out.push_back(cur);
      cur = ivs[i];
    }
  }
  out.push_back(cur);
  return out;
}

Rational interval_union_measure(std::vector<Interval> ivs) {
  Rational total;
  for (const auto& c : interval_union_components(std::move(ivs))) total += c.length();
  return total;
}

static void require_same_dim(const std::vector<AxisBox>& boxes) {
  for (size_t i = 1; i < boxes.size(); ++i)
    if (boxes[i].dim() != boxes[0].dim())
      throw std::invalid_argument("box union: mixed dimensions");
}

namespace {

// Intersection of boxes, nullopt when empty. Degenerate overlap counts as a
// (volume zero) box; it contributes nothing either way.
std::optional<AxisBox> intersect(const AxisBox& a, const AxisBox& b) {
  Point lo = a.lo, hi = a.hi;
  for (size_t i = 0; i < lo.x.size(); ++i) {
    if (lo.x[i] < b.lo.x[i]) lo.x[i] = b.lo.x[i];
    if (b.hi.x[i] < hi.x[i]) hi.x[i] = b.hi.x[i];
    if (hi.x[i] < lo.x[i]) return std::nullopt;
  }
  return AxisBox(std::move(lo), std::move(hi));
}

// DFS over subsets; a branch dies as soon as the running intersection is
// empty, which is what makes 2^20 feasible in practice.
void ie_recurse(const std::vector<AxisBox>& boxes, size_t next, const AxisBox& cur,
                int parity, Rational& acc) {
  for (size_t i = next; i < boxes.size(); ++i) {
    auto inter = intersect(cur, boxes[i]);
    if (!inter) continue;
    if (parity > 0) acc += inter->volume(); else acc -= inter->volume();
    ie_recurse(boxes, i + 1, *inter, -parity, acc);
  }
}

Rational sweep_recurse(const std::vector<AxisBox>& boxes, int axis) {
  const int n = boxes[0].dim();
  if (axis == n - 1) {
    std::vector<Interval> ivs;
    ivs.reserve(boxes.size());
    for (const auto& b : boxes) ivs.emplace_back(b.lo[axis], b.hi[axis]);
    return interval_union_measure(std::move(ivs));
  }

  std::vector<Rational> cuts;
  cuts.reserve(boxes.size() * 2);
  for (const auto& b : boxes) {
    cuts.push_back(b.lo[axis]);
    cuts.push_back(b.hi[axis]);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  Rational total;
  std::vector<AxisBox> active;
  for (size_t j = 0; j + 1 < cuts.size(); ++j) {
    active.clear();
    for (const auto& b : boxes)
      if (b.lo[axis] <= cuts[j] && cuts[j + 1] <= b.hi[axis]) active.push_back(b);
    if (active.empty()) continue;
    total += (cuts[j + 1] - cuts[j]) * sweep_recurse(active, axis + 1);
  }
  return total;
}

}  // namespace

Rational box_union_volume_inclusion_exclusion(const std::vector<AxisBox>& boxes) {
  if (boxes.empty()) return Rational(0);
  require_same_dim(boxes);
  Rational acc;
  // Seed with the whole space: intersecting with box i yields box i itself.
  for (size_t i = 0; i < boxes.size(); ++i) {
    acc += boxes[i].volume();
    ie_recurse(boxes, i + 1, boxes[i], -1, acc);
  }
  return acc;
}

Rational box_union_volume_sweep(const std::vector<AxisBox>& boxes) {
  if (boxes.empty()) return Rational(0);
  require_same_dim(boxes);
  return sweep_recurse(boxes, 0);
}

bool box_union_volume_supported(size_t box_count, int dim) {
  return box_count <= static_cast<size_t>(kInclusionExclusionMaxBoxes) || dim <= kSweepMaxDim;
}

Rational box_union_volume(const std::vector<AxisBox>& boxes) {
  if (boxes.empty()) return Rational(0);
  require_same_dim(boxes);
  if (boxes.size() <= static_cast<size_t>(kInclusionExclusionMaxBoxes))
    return box_union_volume_inclusion_exclusion(boxes);
  if (boxes[0].dim() <= kSweepMaxDim)
    return box_union_volume_sweep(boxes);
  throw std::invalid_argument(
      "box union: unsupported size (more than " + std::to_string(kInclusionExclusionMaxBoxes) +
      " boxes in dimension > " + std::to_string(kSweepMaxDim) + ")");
}

}  // namespace minklab
