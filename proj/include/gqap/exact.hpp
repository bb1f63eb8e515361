#pragma once

#include <cstdint>
#include <string>

#include "gqap/evaluation.hpp"

namespace gqap {

// Size of the linearized MILP (binary x_ik, continuous w_ijkl over ordered
// pairs i != j, k != l, one linking row per w).
struct ModelStats {
    long long constraints = 0; // M + N + M(M-1)N(N-1)
    long long variables = 0;   // MN + M(M-1)N(N-1)
    long long binaries = 0;    // MN

    friend bool operator==(const ModelStats&, const ModelStats&) = default;
};

ModelStats model_statistics(int machines, int locations);

struct ExactResult {
    Assignment optimum;
    double z_opt = 0.0;
    long long feasible_count = 0; // feasible assignments in the whole space
    long long enumerated = 0;     // complete assignments evaluated (pruning skips some)
};

// Exhaustive search over all N^M assignments in lexicographic order,
// returning the minimum-cost feasible one (tie: lexicographically
// smallest). Subtrees whose partial load already exceeds a capacity are
// pruned; they contain no feasible completion. Throws when N^M > limit or
// when no feasible assignment exists.
ExactResult brute_force_optimum(const GqapInstance& inst, long long limit = 10'000'000);

// Linearized MILP in CPLEX LP text format. Variables x_i_k (binary) and
// w_i_j_k_l (continuous, >= 0), 1-based indices. Rows asg_1..asg_M,
// cap_1..cap_N, then lnk_i_j_k_l in (i,j,k,l) order with body
// x_i_k + x_j_l - w_i_j_k_l <= 1. Objective terms ordered by (i,k) then
// (i,j,k,l). Pairs with k = l carry no objective term, so the LP optimum
// matches the assignment cost model when distance diagonals are zero.
// By default, quadruples whose objective coefficient is zero are dropped
// entirely (term, linking row and column); counting mode keeps them all so
// the emitted row/column counts equal model_statistics.
std::string write_lp(const GqapInstance& inst, bool counting_mode = false);

} // namespace gqap
