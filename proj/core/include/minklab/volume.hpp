#pragma once

#include <vector>

#include "minklab/geom.hpp"

namespace minklab {

// Exact Lebesgue measure of a union of closed intervals (sort and sweep).
// Invariant under permutation and duplication of the input.
Rational interval_union_measure(std::vector<Interval> ivs);

// Merged, sorted, pairwise-disjoint components of the union. Touching
// intervals are joined.
std::vector<Interval> interval_union_components(std::vector<Interval> ivs);

// Exact volume of a union of axis boxes. Dispatch: inclusion-exclusion with
// empty-intersection pruning for <= kInclusionExclusionMaxBoxes boxes,
// recursive coordinate sweep for larger inputs in dimension <= kSweepMaxDim.
// Anything beyond both engines throws.
inline constexpr int kInclusionExclusionMaxBoxes = 20;
inline constexpr int kSweepMaxDim = 4;

Rational box_union_volume(const std::vector<AxisBox>& boxes);

// The two routes individually, for cross-checks.
Rational box_union_volume_inclusion_exclusion(const std::vector<AxisBox>& boxes);
Rational box_union_volume_sweep(const std::vector<AxisBox>& boxes);

bool box_union_volume_supported(size_t box_count, int dim);

}  // namespace minklab
