#pragma once

#include <optional>
#include <vector>

#include "minklab/rational.hpp"

namespace minklab {

// Exact feasibility of { y >= 0 : A y = b } by a phase-1 simplex with
// Bland's rule (no cycling). Dense rational tableau; intended for the small
// systems this library generates (tens of rows, up to a few hundred columns).
// Returns a feasible y on success, nullopt when the system is infeasible.
std::optional<std::vector<Rational>> solve_standard_form_feasibility(
    const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b);

}  // namespace minklab
