#include "gqap/local_search.hpp"

namespace gqap {

Neighborhood neighbors(const GqapInstance& inst, const Assignment& s) {
    validate_assignment(inst, s);
    const int m = inst.machine_count;
    const int n = inst.location_count;
    Neighborhood moves;
    moves.reserve(static_cast<std::size_t>(m) * (n - 1) + static_cast<std::size_t>(m) * (m - 1) / 2);
    // single-machine reassignments
    for (int i = 0; i < m; ++i)
        for (int k = 1; k <= n; ++k) {
            if (k == s[i])
                continue;
            Assignment moved = s;
            moved[i] = k;
            moves.push_back(std::move(moved));
        }
    // pairwise exchanges across different locations
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (s[i] == s[j])
                continue;
            Assignment swapped = s;
            std::swap(swapped[i], swapped[j]);
            moves.push_back(std::move(swapped));
        }
    return moves;
}

std::pair<Assignment, double> steepest_descent(const GqapInstance& inst, const Assignment& s) {
    double cost = total_cost(inst, s);
    if (unfitness_of(inst, s) > 0)
        return {s, cost};

    Assignment current = s;
    for (;;) {
        Assignment best_move;
        double best_cost = cost;
        for (const Assignment& candidate : neighbors(inst, current)) {
            if (unfitness_of(inst, candidate) > 0)
                continue;
            double c = total_cost(inst, candidate);
            if (c < best_cost) { // strict: plateaus end the search
                best_cost = c;
                best_move = candidate;
            }
        }
        if (best_move.empty())
            return {current, cost};
        current = std::move(best_move);
        cost = best_cost;
    }
}

} // namespace gqap
