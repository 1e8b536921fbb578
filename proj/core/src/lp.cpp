#include "minklab/lp.hpp"

#include <stdexcept>

namespace minklab {

std::optional<std::vector<Rational>> solve_standard_form_feasibility(
    const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b) {
  const size_t m = a.size();
  if (b.size() != m) throw std::invalid_argument("lp: rhs size mismatch");
  if (m == 0) return std::vector<Rational>{};
  const size_t n = a[0].size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("lp: ragged matrix");

  // Tableau [A | I | b] with rows flipped so b >= 0; artificial basis.
  const size_t cols = n + m + 1;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols));
  for (size_t i = 0; i < m; ++i) {
    const bool flip = b[i].sign() < 0;
    for (size_t j = 0; j < n; ++j) t[i][j] = flip ? -a[i][j] : a[i][j];
    t[i][n + i] = Rational(1);
    t[i][cols - 1] = flip ? -b[i] : b[i];
  }
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) basis[i] = n + i;

  // Phase 1: minimize the sum of artificials (cost 1 on columns n..n+m-1).
  auto cost = [&](size_t j) { return j >= n ? Rational(1) : Rational(0); };

  for (;;) {
    // Reduced costs r_j = c_j - sum_i c_basis(i) * t[i][j], recomputed each
    // pivot; the tableau stays small so this is simpler than updating a row.
    std::optional<size_t> enter;
    for (size_t j = 0; j < n + m; ++j) {
      Rational r = cost(j);
      for (size_t i = 0; i < m; ++i)
        if (basis[i] >= n) r -= t[i][j];  // c_basis = 1 only for artificials
      if (r.sign() < 0) { enter = j; break; }  // Bland: smallest index
    }
    if (!enter) break;

    std::optional<size_t> leave;
    Rational best_ratio;
    for (size_t i = 0; i < m; ++i) {
      if (t[i][*enter].sign() <= 0) continue;
      Rational ratio = t[i][cols - 1] / t[i][*enter];
      if (!leave || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[*leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (!leave) throw std::logic_error("lp: phase-1 objective unbounded");

    // Pivot.
    const size_t pr = *leave, pc = *enter;
    const Rational piv = t[pr][pc];
    for (auto& v : t[pr]) v /= piv;
    for (size_t i = 0; i < m; ++i) {
      if (i == pr || t[i][pc].is_zero()) continue;
      const Rational f = t[i][pc];
      for (size_t j = 0; j < cols; ++j) t[i][j] -= f * t[pr][j];
    }
    basis[pr] = pc;
  }

  Rational objective;
  for (size_t i = 0; i < m; ++i)
    if (basis[i] >= n) objective += t[i][cols - 1];
  if (!objective.is_zero()) return std::nullopt;

  std::vector<Rational> y(n);
  for (size_t i = 0; i < m; ++i)
    if (basis[i] < n) y[basis[i]] = t[i][cols - 1];
  return y;
}

}  // namespace minklab
