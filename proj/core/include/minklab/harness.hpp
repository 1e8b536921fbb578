#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minklab/compact_set.hpp"
#include "minklab/measures.hpp"

namespace minklab {

// Outcome of one mechanically checked claim. violations == 0 iff witnesses
// is empty; worst_margin is the signed slack of the tightest instance and is
// nonnegative whenever violations == 0.
struct Report {
  std::string claim_id;
  long instances = 0;
  long violations = 0;
  long skipped = 0;  // instances dropped by budget or engine limits
  std::optional<Rational> worst_margin;
  std::vector<std::string> witnesses;  // serialized inputs of violating instances
  std::vector<std::pair<std::string, std::string>> details;
  long runtime_ms = 0;
};

struct RateRow {
  int k = 0;
  MeasureResult delta, hausdorff, schneider;
};

// k versus the three measures, with k-scaled columns emitted on output for
// eyeballing O(1/k) boundedness.
struct RateTable {
  std::string label;
  int dim = 0;
  Rep rep = Rep::Points;
  std::vector<RateRow> rows;
};

// Exact check of the two-box cross in R^n: volumes of A(2) and A(3) through
// the box engine against the closed forms, and the equivalent power
// inequality 2^p + 2^(n-p) - 1 >= (3/2)^n evaluated independently. A
// violation (volume drop from A(2) to A(3)) is expected for n >= 12 at
// p = ceil(n/2).
Report verify_counterexample(int n, int p);

// c(A(k+1)) <= k/(k+1) c(A(k)) for k = 1..kmax. dim 1: exact closed form.
// dim 2: bisection brackets compared conservatively,
// value_hi(k+1) <= k/(k+1) value_lo(k) + 2 tol.
Report check_theorem2(int trials, int kmax, uint64_t seed, int dim = 1,
                      const MeasureOptions& opt = {});

// d(A(k+1))^2 <= (k/(k+1))^2 d(A(k))^2 on exact squared values. dim 1: all
// k >= 1 (c(A) <= 1 there). dim 2: point sets, checked for k >= 2, the
// eventual-monotonicity regime k >= n.
Report check_theorem3(int trials, int kmax, uint64_t seed, int dim = 1,
                      const MeasureOptions& opt = {});

// Vol_1(A(k)) non-decreasing for k = 1..kmax, exact.
Report check_1d_monotonicity(int trials, int kmax, uint64_t seed);

// Vol(sum of all) >= 1/(k-1) * sum_i Vol(sum without i), exact volumes.
Report check_superadditivity(const std::vector<CompactSet>& sets);
// Seeded triples of box unions, half in R^2 and half in R^3.
Report check_superadditivity_random(int trials, uint64_t seed);

// Vol(b1+b2+b3) + Vol(b1) >= Vol(b1+b2) + Vol(b1+b3) for boxes, exact.
Report check_supermodularity(const AxisBox& b1, const AxisBox& b2, const AxisBox& b3);
Report check_supermodularity_random(int trials, uint64_t seed);

// c(A+B+C) <= max{c(A+B), c(B+C)} for 1-D triples, exact.
Report check_triple_c(int trials, uint64_t seed);

// The incomparability families: finite grids (delta constant, c and d
// strictly decreasing), three-point sets (delta to zero, d and c bounded
// below), scaled segment pairs (c invariant, delta and d shrinking).
Report check_gallery(const MeasureOptions& opt = {});

// Random box unions in the open range 2 <= dim <= 11; exact volumes of
// averages, every decrease flagged with a fully serialized witness. Never
// concludes nonexistence: the result is "no witness found in N trials".
Report search_violation(int dim, int trials, int kmax, uint64_t seed, long budget);

// Box-count budget for k-fold sums: MINKLAB_BUDGET when set, else 5000.
long default_box_budget();

RateTable rates(const CompactSet& a, int kmax, const MeasureOptions& opt = {});

}  // namespace minklab
