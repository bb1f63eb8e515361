#pragma once

#include <utility>
#include <vector>

#include "gqap/evaluation.hpp"

namespace gqap {

using Neighborhood = std::vector<Assignment>;

// Shift/swap neighborhood of s, in deterministic enumeration order: first
// every single-machine reassignment (machine ascending, new location
// ascending), then every pairwise exchange of machines on different
// locations (i < j, i ascending then j). At most M(N-1) + M(M-1)/2 moves,
// each distinct from s.
Neighborhood neighbors(const GqapInstance& inst, const Assignment& s);

// Steepest descent over the neighborhood above: move to the cheapest
// feasible neighbor while one is strictly cheaper (tie: first in
// enumeration order). Infeasible inputs are returned unchanged with their
// cost. The result is a local optimum of the feasible neighborhood.
std::pair<Assignment, double> steepest_descent(const GqapInstance& inst, const Assignment& s);

} // namespace gqap
