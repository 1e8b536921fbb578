#include "minklab/measures.hpp"

#include <algorithm>
#include <stdexcept>

#include "minklab/hull.hpp"
#include "minklab/lp.hpp"
#include "minklab/polygon.hpp"
#include "minklab/rng.hpp"
#include "minklab/volume.hpp"

namespace minklab {

std::string measure_kind_name(MeasureKind k) {
  switch (k) {
    case MeasureKind::VolumeDeficit: return "delta";
    case MeasureKind::HausdorffToHull: return "hausdorff";
    case MeasureKind::SchneiderIndex: return "schneider";
  }
  throw std::logic_error("measure_kind_name: bad enum");
}

std::string certificate_kind_name(CertificateKind k) {
  switch (k) {
    case CertificateKind::Exact1D: return "exact_1d";
    case CertificateKind::Exact2D: return "exact_2d";
    case CertificateKind::ExactAnalytic: return "exact_analytic";
    case CertificateKind::BisectionInterval: return "bisection_interval";
    case CertificateKind::MonteCarlo: return "monte_carlo";
  }
  throw std::logic_error("certificate_kind_name: bad enum");
}

namespace {

constexpr int kMonteCarloMaxDim = 10;  // Schneider / volume-deficit sampling
constexpr int kCoveringGridMaxDim = 6; // Hausdorff covering-grid bound
constexpr size_t kCoveringGridNodeBudget = 16384;
constexpr long kSampleDenominator = 65536;  // 2^16 rationalization grid

GapProfile profile_from_intervals(std::vector<Interval> ivs) {
  auto comps = interval_union_components(std::move(ivs));
  GapProfile p;
  p.components = comps.size();
  p.diameter = comps.back().hi - comps.front().lo;
  for (const auto& c : comps) p.measure += c.length();
  for (size_t i = 0; i + 1 < comps.size(); ++i) {
    Rational g = comps[i + 1].lo - comps[i].hi;
    p.sum_gaps += g;
    if (p.max_gap < g) p.max_gap = g;
  }
  return p;
}

MeasureResult exact_result(MeasureKind kind, Rational value, CertificateKind cert) {
  MeasureResult r;
  r.kind = kind;
  r.value_lo = value;
  r.value_hi = std::move(value);
  r.certificate.kind = cert;
  return r;
}

// Exact coordinates on the 2^16 sub-grid of [lo, hi]; no floating point.
Rational grid_sample(DetRng& rng, const Rational& lo, const Rational& hi) {
  const Rational t(static_cast<long>(rng.below(kSampleDenominator + 1)), kSampleDenominator);
  return lo + t * (hi - lo);
}

Point box_sample(DetRng& rng, const AxisBox& bbox) {
  std::vector<Rational> c;
  c.reserve(static_cast<size_t>(bbox.dim()));
  for (int i = 0; i < bbox.dim(); ++i) c.push_back(grid_sample(rng, bbox.lo[i], bbox.hi[i]));
  return Point(std::move(c));
}

// Carrier-line view of a set whose generator vertices are all collinear:
// positions in units of the direction vector u, plus |u|^2 for converting
// gap lengths back to Euclidean terms.
struct LineProfile {
  GapProfile profile;  // s-units
  Rational uu;         // squared Euclidean length of u
};

std::optional<LineProfile> collinear_profile(const CompactSet& a) {
  const auto verts = a.generator_vertices();
  if (verts.size() == 1) {
    LineProfile lp;
    lp.profile = profile_from_intervals({Interval(Rational(0), Rational(0))});
    lp.uu = Rational(0);
    return lp;
  }
  const Point& origin = verts.front();
  const Point u = sub(verts.back(), origin);
  const Rational uu = dot(u, u);
  auto s_of = [&](const Point& p) -> std::optional<Rational> {
    const Rational s = dot(sub(p, origin), u) / uu;
    // p must equal origin + s u exactly, else the set is not collinear.
    for (int i = 0; i < p.dim(); ++i)
      if (p[i] != origin[i] + s * u[i]) return std::nullopt;
    return s;
  };
  for (const auto& v : verts)
    if (!s_of(v)) return std::nullopt;

  std::vector<Interval> ivs;
  switch (a.rep()) {
    case Rep::Points:
      for (const auto& p : a.point_data()) {
        Rational s = *s_of(p);
        ivs.emplace_back(s, s);
      }
      break;
    case Rep::Boxes:
      for (const auto& b : a.box_data()) {
        Rational s1 = *s_of(b.lo), s2 = *s_of(b.hi);
        ivs.emplace_back(min(s1, s2), max(s1, s2));
      }
      break;
    case Rep::Intervals:
      for (const auto& iv : a.interval_data()) ivs.emplace_back(iv.lo, iv.hi);
      break;
  }
  LineProfile lp;
  lp.profile = profile_from_intervals(std::move(ivs));
  lp.uu = uu;
  return lp;
}

// Project away axes on which the whole set is constant. Distances, hull
// membership and all three measures are unchanged: the dropped coordinates
// agree on the set, its hull, and every sum A + lambda conv(A).
CompactSet drop_constant_axes(const CompactSet& a, bool& changed) {
  const AxisBox bbox = a.bounding_box();
  std::vector<int> keep;
  for (int i = 0; i < a.dim(); ++i)
    if (bbox.lo[i] != bbox.hi[i]) keep.push_back(i);
  changed = keep.size() != static_cast<size_t>(a.dim());
  if (!changed || keep.empty()) {
    changed = keep.size() != static_cast<size_t>(a.dim()) && !keep.empty();
    return a;
  }
  auto project_point = [&](const Point& p) {
    std::vector<Rational> c;
    c.reserve(keep.size());
    for (int i : keep) c.push_back(p[i]);
    return Point(std::move(c));
  };
  switch (a.rep()) {
    case Rep::Points: {
      std::vector<Point> pts;
      pts.reserve(a.point_data().size());
      for (const auto& p : a.point_data()) pts.push_back(project_point(p));
      return CompactSet::points(std::move(pts));
    }
    case Rep::Boxes: {
      std::vector<AxisBox> bxs;
      bxs.reserve(a.box_data().size());
      for (const auto& b : a.box_data())
        bxs.emplace_back(project_point(b.lo), project_point(b.hi));
      return CompactSet::boxes(std::move(bxs));
    }
    case Rep::Intervals:
      return a;
  }
  throw std::logic_error("drop_constant_axes: bad enum");
}

Rational squared_distance_to_set(const Point& x, const CompactSet& a) {
  std::optional<Rational> best;
  if (a.rep() == Rep::Boxes) {
    for (const auto& b : a.box_data()) {
      Rational d = squared_point_box_distance(x, b);
      if (!best || d < *best) best = d;
    }
  } else if (a.rep() == Rep::Points) {
    for (const auto& p : a.point_data()) {
      Rational d = squared_distance(x, p);
      if (!best || d < *best) best = d;
    }
  } else {
    for (const auto& iv : a.interval_data()) {
      Rational d(0);
      if (x[0] < iv.lo) d = (iv.lo - x[0]) * (iv.lo - x[0]);
      else if (iv.hi < x[0]) d = (x[0] - iv.hi) * (x[0] - iv.hi);
      if (!best || d < *best) best = d;
    }
  }
  return *best;
}

// Hausdorff result from an exactly known squared value: exact value when the
// root is rational, otherwise a square-root enclosure at the tolerance.
MeasureResult finish_hausdorff_squared(Rational dsq, CertificateKind exact_kind,
                                       const MeasureOptions& opt) {
  MeasureResult r;
  r.kind = MeasureKind::HausdorffToHull;
  r.squared = dsq;
  if (auto s = exact_sqrt(dsq)) {
    r.value_lo = *s;
    r.value_hi = *s;
    r.certificate.kind = exact_kind;
  } else {
    auto [lo, hi] = sqrt_enclosure(dsq, opt.tolerance);
    r.value_lo = lo;
    r.value_hi = hi;
    r.certificate.kind = CertificateKind::BisectionInterval;
    r.certificate.tolerance = opt.tolerance;
  }
  return r;
}

Rational factorial(int n) {
  Rational f(1);
  for (int i = 2; i <= n; ++i) f *= Rational(i);
  return f;
}

}  // namespace

std::optional<Rational> analytic_hull_volume(const CompactSet& a) {
  if (!a.cross_tag()) return std::nullopt;
  const CrossSpec& c = *a.cross_tag();
  const int q = c.n - c.p;
  // conv(I1 u I2) = { (x,y) : x in t I1, y in (1-t) I2, t in [0,1] }, so its
  // volume is s1^p s2^q * Int_0^1 q v^(q-1) (1-v)^p dv = s1^p s2^q p! q! / n!.
  return Rational::pow(c.side1, c.p) * Rational::pow(c.side2, q) *
         factorial(c.p) * factorial(q) / factorial(c.n);
}

GapProfile gap_profile_1d(const CompactSet& a) {
  return profile_from_intervals(as_intervals_1d(a));
}

// ---------------------------------------------------------------------------
// Volume deficit
// ---------------------------------------------------------------------------

namespace {

MeasureResult delta_monte_carlo(const CompactSet& a, const MeasureOptions& opt) {
  const AxisBox bbox = a.bounding_box();
  const Rational bvol = bbox.volume();
  const Rational set_vol = a.volume();
  if (bvol.is_zero())
    return exact_result(MeasureKind::VolumeDeficit, Rational(0), CertificateKind::ExactAnalytic);

  const auto verts = a.generator_vertices();
  DetRng rng(derive_seed(opt.seed, 0x64656c7461ULL));  // stream "delta"
  const int n_samples = std::max(opt.samples, 16);
  long hits = 0;
  for (int i = 0; i < n_samples; ++i) {
    const Point x = box_sample(rng, bbox);
    if (hull_membership(x, verts)) ++hits;
  }
  const Rational phat(hits, n_samples);
  // Two-sided 99% Hoeffding band: 2 exp(-2 N eps^2) <= 1/100 once
  // eps^2 >= ln(200)/(2N); 53/10 is a rational upper bound for ln(200).
  const Rational eps_sq = Rational(53, 10) / Rational(2L * n_samples);
  const Rational eps = sqrt_enclosure(eps_sq, opt.tolerance).second;

  Rational p_lo = phat - eps, p_hi = phat + eps;
  if (p_lo.sign() < 0) p_lo = Rational(0);
  if (Rational(1) < p_hi) p_hi = Rational(1);
  Rational conv_lo = max(set_vol, p_lo * bvol);
  Rational conv_hi = min(bvol, p_hi * bvol);
  if (conv_hi < conv_lo) conv_hi = conv_lo;  // statistical band can undershoot

  MeasureResult r;
  r.kind = MeasureKind::VolumeDeficit;
  r.value_lo = conv_lo - set_vol;
  r.value_hi = conv_hi - set_vol;
  r.certificate.kind = CertificateKind::MonteCarlo;
  r.certificate.seed = opt.seed;
  r.certificate.samples = n_samples;
  return r;
}

}  // namespace

MeasureResult volume_deficit(const CompactSet& a, const MeasureOptions& opt) {
  if (a.dim() == 1)
    return exact_result(MeasureKind::VolumeDeficit, gap_profile_1d(a).sum_gaps,
                        CertificateKind::Exact1D);

  if (auto hull_vol = analytic_hull_volume(a)) {
    return exact_result(MeasureKind::VolumeDeficit, *hull_vol - a.volume(),
                        CertificateKind::ExactAnalytic);
  }

  if (a.dim() == 2) {
    const auto hull = hull_2d(a.generator_vertices());
    if (hull.degenerate)  // conv(A) and A both have measure zero
      return exact_result(MeasureKind::VolumeDeficit, Rational(0), CertificateKind::Exact2D);
    const Rational hull_area = Polygon2(hull.vertices).area();
    return exact_result(MeasureKind::VolumeDeficit, hull_area - a.volume(),
                        CertificateKind::Exact2D);
  }

  if (a.dim() <= kMonteCarloMaxDim) return delta_monte_carlo(a, opt);
  throw UnsupportedMeasure("delta: dimension " + std::to_string(a.dim()) +
                           " beyond Monte-Carlo support (max " +
                           std::to_string(kMonteCarloMaxDim) + ") without analytic hull");
}

// ---------------------------------------------------------------------------
// Hausdorff distance to the hull
// ---------------------------------------------------------------------------

namespace {

// Nearest-site squared distance with outward scan over x-sorted sites; the
// scan stops once the x gap alone rules out improvement.
Rational nearest_site_dsq(const Point& c, const std::vector<Point>& by_x) {
  const size_t m = by_x.size();
  size_t hi = std::lower_bound(by_x.begin(), by_x.end(), c,
                               [](const Point& a, const Point& b) { return a[0] < b[0]; }) -
              by_x.begin();
  size_t lo = hi;
  std::optional<Rational> best;
  auto consider = [&](size_t i) {
    const Rational dx = by_x[i][0] - c[0];
    if (best && *best <= dx * dx) return false;  // nothing further on this side helps
    const Rational dy = by_x[i][1] - c[1];
    const Rational d = dx * dx + dy * dy;
    if (!best || d < *best) best = d;
    return true;
  };
  bool go_lo = lo > 0, go_hi = hi < m;
  while (go_lo || go_hi) {
    if (go_hi) {
      if (consider(hi)) { ++hi; go_hi = hi < m; } else { go_hi = false; }
    }
    if (go_lo) {
      if (consider(lo - 1)) { --lo; go_lo = lo > 0; } else { go_lo = false; }
    }
  }
  return *best;
}

// Coarse covering-grid upper bound on d^2 over the bounding box; used only
// to prune candidate enumeration, so looseness costs time, not correctness.
Rational coarse_upper_bound_dsq(const std::vector<Point>& by_x, const AxisBox& bbox) {
  constexpr long kCells = 32;
  Rational grid_max(0);
  for (long i = 0; i <= kCells; ++i)
    for (long j = 0; j <= kCells; ++j) {
      Point g(std::vector<Rational>{
          bbox.lo[0] + Rational(i, kCells) * (bbox.hi[0] - bbox.lo[0]),
          bbox.lo[1] + Rational(j, kCells) * (bbox.hi[1] - bbox.lo[1])});
      Rational d = nearest_site_dsq(g, by_x);
      if (grid_max < d) grid_max = d;
    }
  Rational half_diag_sq(0);
  for (int i = 0; i < 2; ++i) {
    Rational h = (bbox.hi[i] - bbox.lo[i]) / Rational(2 * kCells);
    half_diag_sq += h * h;
  }
  const Rational coarse_tol(1, 1024);
  const Rational s = sqrt_enclosure(grid_max, coarse_tol).second +
                     sqrt_enclosure(half_diag_sq, coarse_tol).second;
  return s * s;
}

// Exact 2-D farthest-point search over the finite candidate set: hull
// vertices, pair-bisector crossings with hull edges, and circumcenters of
// point triples inside the hull. The maximizer of min-distance over a convex
// polygon is a Voronoi vertex, a Voronoi-edge/boundary crossing, or a
// polygon vertex, so the enumeration is exhaustive; extra candidates only
// repeat smaller values. Pairs and triples whose sites are more than 2d
// apart cannot define the maximizer (its nearest sites lie on a circle of
// radius d), so both loops prune on pairwise distance against a covering
// upper bound for d^2.
Rational hausdorff_squared_2d_points(const std::vector<Point>& sites, const Hull2D& hull) {
  const auto& hv = hull.vertices;
  const size_t nh = hv.size();

  std::vector<Point> by_x = sites;
  std::sort(by_x.begin(), by_x.end(), [](const Point& a, const Point& b) {
    if (a[0] < b[0]) return true;
    if (b[0] < a[0]) return false;
    return a[1] < b[1];
  });

  Point lo = by_x.front(), hi = by_x.front();
  for (const auto& p : by_x)
    for (int i = 0; i < 2; ++i) {
      if (p[i] < lo[i]) lo[i] = p[i];
      if (hi[i] < p[i]) hi[i] = p[i];
    }
  const Rational prune = Rational(4) * coarse_upper_bound_dsq(by_x, AxisBox(lo, hi));

  Rational best(0);
  auto offer = [&](const Point& c) {
    const Rational d = nearest_site_dsq(c, by_x);
    if (best < d) best = d;
  };

  for (const auto& v : hv) offer(v);

  auto bisector = [&](const Point& p, const Point& q) {
    // 2 (q - p) . x = |q|^2 - |p|^2
    Point w = sub(q, p);
    Rational rhs = (dot(q, q) - dot(p, p)) / Rational(2);
    return std::make_pair(w, rhs);  // w . x = rhs
  };

  for (size_t i = 0; i < sites.size(); ++i)
    for (size_t j = i + 1; j < sites.size(); ++j) {
      if (prune < squared_distance(sites[i], sites[j])) continue;
      auto [w, rhs] = bisector(sites[i], sites[j]);
      for (size_t e = 0; e < nh; ++e) {
        const Point& a = hv[e];
        const Point& b = hv[(e + 1) % nh];
        const Rational den = dot(w, sub(b, a));
        if (den.is_zero()) continue;  // parallel edge; endpoints already candidates
        const Rational s = (rhs - dot(w, a)) / den;
        if (s < Rational(0) || Rational(1) < s) continue;
        offer(add(a, scale(sub(b, a), s)));
      }
    }

  for (size_t i = 0; i < sites.size(); ++i)
    for (size_t j = i + 1; j < sites.size(); ++j) {
      if (prune < squared_distance(sites[i], sites[j])) continue;
      for (size_t l = j + 1; l < sites.size(); ++l) {
        if (prune < squared_distance(sites[i], sites[l])) continue;
        if (prune < squared_distance(sites[j], sites[l])) continue;
        auto [w1, r1] = bisector(sites[i], sites[j]);
        auto [w2, r2] = bisector(sites[i], sites[l]);
        const Rational det = w1[0] * w2[1] - w1[1] * w2[0];
        if (det.is_zero()) continue;  // collinear triple
        Point cc(std::vector<Rational>{(r1 * w2[1] - r2 * w1[1]) / det,
                                       (w1[0] * r2 - w2[0] * r1) / det});
        if (!point_in_convex_polygon(cc, hv)) continue;
        offer(cc);
      }
    }

  return best;
}

MeasureResult hausdorff_bounds(const CompactSet& a, const MeasureOptions& opt) {
  if (a.dim() > kCoveringGridMaxDim)
    throw UnsupportedMeasure("hausdorff: no exact path and covering grid capped at dimension " +
                             std::to_string(kCoveringGridMaxDim) + " (got " +
                             std::to_string(a.dim()) + ")");
  const auto verts = a.generator_vertices();
  const AxisBox bbox = a.bounding_box();
  const int n = a.dim();

  // Certified lower bound: the deepest sampled point of conv(A).
  DetRng rng(derive_seed(opt.seed, 0x68617573ULL));  // stream "haus"
  Rational best_dsq(0);
  std::optional<Point> witness;
  const int n_samples = std::max(opt.samples, 16);
  for (int i = 0; i < n_samples; ++i) {
    Point x = box_sample(rng, bbox);
    if (!hull_membership(x, verts)) continue;
    Rational dsq = squared_distance_to_set(x, a);
    if (best_dsq < dsq) {
      best_dsq = dsq;
      witness = x;
    }
  }

  // Covering-grid upper bound: every point of conv(A) is within the half
  // cell diagonal of some grid node of the bounding box, so
  // d <= max_nodes dist(node, A) + half-diagonal.
  size_t cells = 2;
  while (true) {
    size_t nodes = 1;
    bool overflow = false;
    for (int i = 0; i < n; ++i) {
      nodes *= cells + 2;
      if (nodes > kCoveringGridNodeBudget) { overflow = true; break; }
    }
    if (overflow) break;
    ++cells;
  }
  const Rational cells_r(static_cast<long>(cells));
  Rational grid_max_dsq(0);
  std::vector<size_t> idx(static_cast<size_t>(n), 0);
  for (;;) {
    std::vector<Rational> c;
    c.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      Rational t(static_cast<long>(idx[static_cast<size_t>(i)]), static_cast<long>(cells));
      c.push_back(bbox.lo[i] + t * (bbox.hi[i] - bbox.lo[i]));
    }
    Rational dsq = squared_distance_to_set(Point(std::move(c)), a);
    if (grid_max_dsq < dsq) grid_max_dsq = dsq;
    int axis = 0;
    while (axis < n && ++idx[static_cast<size_t>(axis)] > cells) {
      idx[static_cast<size_t>(axis)] = 0;
      ++axis;
    }
    if (axis == n) break;
  }
  Rational half_diag_sq(0);
  for (int i = 0; i < n; ++i) {
    Rational h = (bbox.hi[i] - bbox.lo[i]) / (Rational(2) * cells_r);
    half_diag_sq += h * h;
  }

  MeasureResult r;
  r.kind = MeasureKind::HausdorffToHull;
  r.value_lo = sqrt_enclosure(best_dsq, opt.tolerance).first;
  r.value_hi = sqrt_enclosure(grid_max_dsq, opt.tolerance).second +
               sqrt_enclosure(half_diag_sq, opt.tolerance).second;
  r.certificate.kind = CertificateKind::MonteCarlo;
  r.certificate.seed = opt.seed;
  r.certificate.samples = n_samples;
  r.certificate.witness = witness;
  return r;
}

}  // namespace

MeasureResult hausdorff_to_hull(const CompactSet& a, const MeasureOptions& opt) {
  if (a.dim() == 1) {
    const auto prof = gap_profile_1d(a);
    const Rational d = prof.max_gap / Rational(2);
    MeasureResult r = exact_result(MeasureKind::HausdorffToHull, d, CertificateKind::Exact1D);
    r.squared = d * d;
    return r;
  }

  bool projected = false;
  const CompactSet b = drop_constant_axes(a, projected);
  if (projected) return hausdorff_to_hull(b, opt);  // distances unchanged

  if (auto line = collinear_profile(a)) {
    const Rational half_gap = line->profile.max_gap / Rational(2);
    return finish_hausdorff_squared(half_gap * half_gap * line->uu,
                                    a.dim() == 2 ? CertificateKind::Exact2D
                                                 : CertificateKind::ExactAnalytic,
                                    opt);
  }

  if (a.dim() == 2 && a.rep() == Rep::Points) {
    const auto hull = hull_2d(a.point_data());
    // collinear handled above, so the hull is a genuine polygon
    return finish_hausdorff_squared(hausdorff_squared_2d_points(a.point_data(), hull),
                                    CertificateKind::Exact2D, opt);
  }

  return hausdorff_bounds(a, opt);
}

// ---------------------------------------------------------------------------
// Schneider's non-convexity index
// ---------------------------------------------------------------------------

namespace {

Rational schneider_from_profile(const GapProfile& p) {
  if (p.diameter.is_zero() || p.max_gap.is_zero()) return Rational(0);
  return p.max_gap / p.diameter;
}

bool hull_is_axis_rectangle(const std::vector<Point>& hv) {
  if (hv.size() != 4) return false;
  for (size_t i = 0; i < 4; ++i) {
    const Point& a = hv[i];
    const Point& b = hv[(i + 1) % 4];
    if (a[0] != b[0] && a[1] != b[1]) return false;
  }
  return true;
}

AxisBox polygon_to_box(const std::vector<Point>& hv) {
  Point lo = hv[0], hi = hv[0];
  for (const auto& v : hv)
    for (int i = 0; i < 2; ++i) {
      if (v[i] < lo[i]) lo[i] = v[i];
      if (hi[i] < v[i]) hi[i] = v[i];
    }
  return AxisBox(std::move(lo), std::move(hi));
}

}  // namespace

bool convex_at_lambda_2d(const CompactSet& a, const Rational& lambda) {
  if (lambda.sign() < 0) throw std::invalid_argument("convex test: lambda must be >= 0");
  const auto verts = a.generator_vertices();
  const auto hull = hull_2d(verts);

  if (hull.degenerate) {
    const auto line = collinear_profile(a);
    if (!line) throw std::logic_error("convex test: degenerate hull but not collinear");
    if (line->profile.max_gap.is_zero()) return true;
    // 1-D along the carrier: gaps close once lambda >= max gap / diameter.
    return line->profile.max_gap <= lambda * line->profile.diameter;
  }

  const Rational hull_area = Polygon2(hull.vertices).area();
  if (lambda.is_zero()) return a.volume() == hull_area;

  const Rational target = Rational::pow(Rational(1) + lambda, 2) * hull_area;

  // When conv(A) is an axis rectangle every piece is an axis box; the box
  // engine is far cheaper than generic polygon slabs (finite_grid hits this).
  if (hull_is_axis_rectangle(hull.vertices)) {
    const AxisBox k = scale(polygon_to_box(hull.vertices), lambda);
    std::vector<AxisBox> pieces;
    if (a.rep() == Rep::Points) {
      for (const auto& p : a.point_data())
        pieces.emplace_back(add(k.lo, p), add(k.hi, p));
    } else {
      for (const auto& b : a.box_data()) pieces.push_back(add(b, k));
    }
    return box_union_volume(pieces) == target;
  }

  std::vector<Point> k_verts = hull.vertices;
  for (auto& v : k_verts) v = scale(v, lambda);

  PolySet2 pieces;
  if (a.rep() == Rep::Points) {
    const Polygon2 k(k_verts);
    for (const auto& p : a.point_data()) pieces.parts.push_back(translate(k, p));
  } else {
    for (const auto& b : a.box_data()) {
      std::vector<Point> corner_list = corners(b);
      std::sort(corner_list.begin(), corner_list.end(),
                [](const Point& x, const Point& y) { return x < y; });
      corner_list.erase(std::unique(corner_list.begin(), corner_list.end()), corner_list.end());
      const Hull2D piece = convex_minkowski_sum_2d(corner_list, k_verts);
      if (piece.degenerate) throw std::logic_error("convex test: degenerate piece");
      pieces.parts.push_back(Polygon2(piece.vertices));
    }
  }
  return polyset2_area(pieces) == target;
}

namespace {

MeasureResult schneider_bisection_2d(const CompactSet& a, const MeasureOptions& opt) {
  if (convex_at_lambda_2d(a, Rational(0)))
    return exact_result(MeasureKind::SchneiderIndex, Rational(0), CertificateKind::Exact2D);
  if (!convex_at_lambda_2d(a, Rational(2)))
    throw std::logic_error("schneider: convexity must hold at lambda = n");

  Rational lo(0), hi(2);
  while (opt.tolerance < hi - lo) {
    const Rational mid = (lo + hi) / Rational(2);
    if (convex_at_lambda_2d(a, mid)) hi = mid; else lo = mid;
  }
  MeasureResult r;
  r.kind = MeasureKind::SchneiderIndex;
  r.value_lo = lo;
  r.value_hi = hi;
  r.certificate.kind = CertificateKind::BisectionInterval;
  r.certificate.tolerance = opt.tolerance;
  return r;
}

// Coverage of x by A + lambda K, piece by piece, all checks exact.
bool covered_by_pieces(const Point& x, const CompactSet& a,
                       const std::vector<Point>& hull_verts, const Rational& lambda) {
  if (a.rep() == Rep::Points) {
    const Rational inv = lambda.reciprocal();
    for (const auto& p : a.point_data())
      if (hull_membership(scale(sub(x, p), inv), hull_verts)) return true;
    return false;
  }
  // x in box + lambda K  <=>  exists convex weights mu with
  // lo <= x - lambda (V mu) <= hi, encoded in standard form with slacks.
  const int n = a.dim();
  const size_t m = hull_verts.size();
  for (const auto& b : a.box_data()) {
    std::vector<std::vector<Rational>> mat(static_cast<size_t>(2 * n) + 1,
                                           std::vector<Rational>(m + static_cast<size_t>(2 * n)));
    std::vector<Rational> rhs(static_cast<size_t>(2 * n) + 1);
    for (size_t j = 0; j < m; ++j) mat[0][j] = Rational(1);
    rhs[0] = Rational(1);
    for (int i = 0; i < n; ++i) {
      const size_t r1 = 1 + static_cast<size_t>(2 * i);
      const size_t r2 = r1 + 1;
      for (size_t j = 0; j < m; ++j) {
        mat[r1][j] = lambda * hull_verts[j][i];
        mat[r2][j] = lambda * hull_verts[j][i];
      }
      mat[r1][m + static_cast<size_t>(2 * i)] = Rational(1);       // + slack
      mat[r2][m + static_cast<size_t>(2 * i) + 1] = Rational(-1);  // - surplus
      rhs[r1] = x[i] - b.lo[i];
      rhs[r2] = x[i] - b.hi[i];
    }
    if (solve_standard_form_feasibility(mat, rhs)) return true;
  }
  return false;
}

MeasureResult schneider_monte_carlo(const CompactSet& a, const MeasureOptions& opt) {
  if (a.dim() > kMonteCarloMaxDim)
    throw UnsupportedMeasure("schneider: sampled path capped at dimension " +
                             std::to_string(kMonteCarloMaxDim) + " (got " +
                             std::to_string(a.dim()) + ")");
  const auto verts = a.generator_vertices();
  const AxisBox bbox = a.bounding_box();
  const int n_samples = std::max(opt.samples, 16);

  Rational lo(0), hi(static_cast<long>(a.dim()));
  std::optional<Point> witness;
  uint64_t probe_index = 0;

  while (opt.tolerance < hi - lo) {
    const Rational mid = (lo + hi) / Rational(2);
    // Sample inside (1+mid) conv(A) by rejection from its bounding box;
    // every accepted point is certified by exact hull membership.
    std::vector<Point> scaled = verts;
    const Rational f = Rational(1) + mid;
    for (auto& v : scaled) v = scale(v, f);
    const AxisBox sbox(scale(bbox.lo, f), scale(bbox.hi, f));

    DetRng rng(derive_seed(opt.seed ^ 0x7363686eULL, probe_index++));  // stream "schn"
    std::optional<Point> uncovered;
    int accepted = 0;
    long attempts = 0;
    const long max_attempts = 32L * n_samples;
    while (accepted < n_samples && attempts < max_attempts) {
      ++attempts;
      Point x = box_sample(rng, sbox);
      if (!hull_membership(x, scaled)) continue;
      ++accepted;
      if (!covered_by_pieces(x, a, verts, mid)) {
        uncovered = std::move(x);
        break;
      }
    }
    if (uncovered) {
      lo = mid;  // rigorous: x in (1+mid)conv(A) but outside A + mid conv(A)
      witness = uncovered;
    } else {
      hi = mid;  // heuristic: no witness found at this sample budget
    }
  }

  MeasureResult r;
  r.kind = MeasureKind::SchneiderIndex;
  r.value_lo = lo;
  r.value_hi = hi;
  r.certificate.kind = CertificateKind::MonteCarlo;
  r.certificate.seed = opt.seed;
  r.certificate.samples = n_samples;
  r.certificate.witness = witness;
  r.upper_is_heuristic = true;
  return r;
}

}  // namespace

MeasureResult schneider_c(const CompactSet& a, const MeasureOptions& opt) {
  if (a.dim() == 1)
    return exact_result(MeasureKind::SchneiderIndex, schneider_from_profile(gap_profile_1d(a)),
                        CertificateKind::Exact1D);

  bool projected = false;
  const CompactSet b = drop_constant_axes(a, projected);
  if (projected) return schneider_c(b, opt);  // c is affine-invariant

  if (auto line = collinear_profile(a)) {
    return exact_result(MeasureKind::SchneiderIndex, schneider_from_profile(line->profile),
                        a.dim() == 2 ? CertificateKind::Exact2D : CertificateKind::ExactAnalytic);
  }

  if (a.dim() == 2) return schneider_bisection_2d(a, opt);

  // Convex short-circuits before sampling.
  if (a.rep() == Rep::Boxes && a.box_data().size() == 1)
    return exact_result(MeasureKind::SchneiderIndex, Rational(0), CertificateKind::ExactAnalytic);
  return schneider_monte_carlo(a, opt);
}

// ---------------------------------------------------------------------------
// Scaling behavior
// ---------------------------------------------------------------------------

ScalingBehavior scaling_behavior(const CompactSet& a, const Rational& t,
                                 const MeasureOptions& opt) {
  if (t.sign() <= 0) throw std::invalid_argument("scaling_behavior: t must be positive");
  if (!(a.dim() == 1 || (a.dim() == 2 && a.rep() == Rep::Points)))
    throw UnsupportedMeasure(
        "scaling_behavior: needs all three measures exact (1-D sets or 2-D point sets)");

  const CompactSet ta = scale(a, t);
  ScalingBehavior out;

  auto ratio_of = [](const Rational& num, const Rational& den) {
    ScalingRatio r;
    if (den.is_zero()) {
      r.both_zero = num.is_zero();
      if (!r.both_zero) throw std::logic_error("scaling_behavior: zero measure scaled to nonzero");
    } else {
      r.ratio = num / den;
    }
    return r;
  };

  const MeasureResult da = volume_deficit(a, opt);
  const MeasureResult dta = volume_deficit(ta, opt);
  out.delta_ratio = ratio_of(dta.value_lo, da.value_lo);

  const MeasureResult ha = hausdorff_to_hull(a, opt);
  const MeasureResult hta = hausdorff_to_hull(ta, opt);
  {
    // Exact squared values; the ratio of true distances is the exact root.
    const Rational& sa = *ha.squared;
    const Rational& sta = *hta.squared;
    ScalingRatio r;
    if (sa.is_zero()) {
      r.both_zero = sta.is_zero();
      if (!r.both_zero) throw std::logic_error("scaling_behavior: zero d scaled to nonzero");
    } else {
      auto root = exact_sqrt(sta / sa);
      if (!root) throw std::logic_error("scaling_behavior: d ratio not a perfect square");
      r.ratio = *root;
    }
    out.d_ratio = r;
  }

  if (a.dim() == 1) {
    const Rational ca = schneider_from_profile(gap_profile_1d(a));
    const Rational cta = schneider_from_profile(gap_profile_1d(ta));
    out.c_ratio = ratio_of(cta, ca);
  } else {
    // The 2-D convexity predicate is invariant under scaling (both union
    // area and target scale by t^2 exactly), so c(tA) = c(A) as infima of
    // identical predicate sets. The bisections must agree probe by probe.
    const MeasureResult ca = schneider_c(a, opt);
    const MeasureResult cta = schneider_c(ta, opt);
    if (ca.value_lo != cta.value_lo || ca.value_hi != cta.value_hi)
      throw std::logic_error("scaling_behavior: scale-invariant bisections diverged");
    ScalingRatio r;
    if (ca.is_exact() && ca.value_lo.is_zero()) {
      r.both_zero = true;
    } else {
      r.ratio = Rational(1);
    }
    out.c_ratio = r;
  }
  return out;
}

}  // namespace minklab
