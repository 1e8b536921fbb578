#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "minklab/compact_set.hpp"

namespace minklab {

// Raised for (representation, dimension, measure) combinations outside the
// documented support matrix; the CLI maps it to exit code 2.
struct UnsupportedMeasure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class MeasureKind { VolumeDeficit, HausdorffToHull, SchneiderIndex };
std::string measure_kind_name(MeasureKind k);

enum class CertificateKind {
  Exact1D,            // closed 1-D form
  Exact2D,            // exact 2-D geometry (hull areas, candidate enumeration)
  ExactAnalytic,      // analytically known value (convex short-circuit, cross hull volume)
  BisectionInterval,  // exact yes/no probes bracketing the value
  MonteCarlo          // sampled; see fields for reproducibility and witnesses
};
std::string certificate_kind_name(CertificateKind k);

struct Certificate {
  CertificateKind kind = CertificateKind::Exact1D;
  std::optional<uint64_t> seed;
  std::optional<int> samples;
  std::optional<Rational> tolerance;
  // Exact coordinates of the decisive sample: an uncovered point for the
  // Schneider lower bound, the deepest certified interior point for the
  // Hausdorff lower bound.
  std::optional<Point> witness;
};

// Value of one non-convexity measure with machine-checkable bounds.
// value_lo == value_hi means exact. Hausdorff results carry the exact
// squared value whenever the candidate path ran; the value bounds are then
// square-root enclosures at the working tolerance.
struct MeasureResult {
  MeasureKind kind = MeasureKind::VolumeDeficit;
  Rational value_lo, value_hi;
  std::optional<Rational> squared;
  Certificate certificate;
  bool upper_is_heuristic = false;  // n >= 3 Schneider upper end only

  bool is_exact() const { return value_lo == value_hi; }
};

struct MeasureOptions {
  Rational tolerance = Rational(1, 1048576);  // 2^-20
  uint64_t seed = 0;
  int samples = 512;
};

// Volume deficit: measure of conv(A) minus measure of A.
// Exact: 1-D; 2-D points/boxes; cross-tagged boxes in any dimension
// (analytic hull volume). Otherwise Monte-Carlo hull-volume bounds (99%
// two-sided Hoeffding band), supported up to dimension 10.
MeasureResult volume_deficit(const CompactSet& a, const MeasureOptions& opt = {});

// Hausdorff distance from conv(A) to A.
// Exact: 1-D (half the largest gap); 2-D point sets (candidate enumeration
// over pair bisectors and triple circumcenters, compared on squared
// distances). Otherwise: certified sampled lower bound plus a covering-grid
// upper bound, supported up to dimension 6.
MeasureResult hausdorff_to_hull(const CompactSet& a, const MeasureOptions& opt = {});

// Schneider's non-convexity index: inf{lambda >= 0 : A + lambda conv(A) convex}.
// Exact: 1-D (largest gap / diameter). 2-D: bisection on lambda with the
// exact union-area convexity test; both bracket ends rigorous. n >= 3:
// bisection with Monte-Carlo coverage probes; the lower end is rigorous
// (every uncovered sample is exactly certified), the upper end is heuristic
// and flagged. Boxes supported up to dimension 10 on the sampled path.
MeasureResult schneider_c(const CompactSet& a, const MeasureOptions& opt = {});

struct ScalingRatio {
  std::optional<Rational> ratio;  // measure(tA) / measure(A) when defined
  bool both_zero = false;         // convex inputs: both measures vanish
};

struct ScalingBehavior {
  ScalingRatio c_ratio, delta_ratio, d_ratio;
};

// Exact ratios measure(tA)/measure(A); contract c_ratio = 1, delta_ratio =
// t^n, d_ratio = t. Supported where all three measures are exact: 1-D any
// representation, 2-D point sets.
ScalingBehavior scaling_behavior(const CompactSet& a, const Rational& t,
                                 const MeasureOptions& opt = {});

// 1-D gap structure shared by the three closed forms.
struct GapProfile {
  Rational diameter;
  Rational max_gap;
  Rational sum_gaps;
  Rational measure;
  size_t components = 0;
};
GapProfile gap_profile_1d(const CompactSet& a);

// Exact 2-D convexity test for A + lambda conv(A) at lambda > 0: union area
// of the translated/summed hull pieces against the area of (1+lambda)conv(A).
bool convex_at_lambda_2d(const CompactSet& a, const Rational& lambda);

// Hull volume of a cross-tagged set: side1^p side2^q p! q! / n!.
std::optional<Rational> analytic_hull_volume(const CompactSet& a);

}  // namespace minklab
