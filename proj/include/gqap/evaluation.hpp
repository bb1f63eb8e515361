#pragma once

#include <string>
#include <vector>

#include "gqap/instance.hpp"

namespace gqap {

// Solution chromosome: slots[i] = location of machine i+1, entries 1..N.
using Assignment = std::vector<int>;

struct EvaluatedAssignment {
    Assignment assignment;
    double fitness = 0.0;        // total cost
    double unfitness = 0.0;      // total capacity overuse; 0 iff feasible
    std::vector<double> loads;   // space consumed at each location, length N

    bool feasible() const { return unfitness == 0.0; }
};

// Throws GqapError when s has the wrong length or an out-of-range slot.
void validate_assignment(const GqapInstance& inst, const Assignment& s);

// Total cost: sum of assignment costs plus unit_cost * f_ij * d_{s(i)s(j)}
// over all ordered pairs i != j (both directions contribute; no symmetry
// assumption).
double total_cost(const GqapInstance& inst, const Assignment& s);

// loads[k-1] = sum of requirements of the machines assigned to location k.
std::vector<double> location_loads(const GqapInstance& inst, const Assignment& s);

// Sum over locations of max(0, load - capacity). Zero iff feasible.
double unfitness_of(const GqapInstance& inst, const Assignment& s);

// All of the above in one pass.
EvaluatedAssignment evaluate(const GqapInstance& inst, const Assignment& s);

// 100 * (z - z_ref) / z_ref. Throws on z_ref <= 0.
double percent_deviation(double z, double z_ref);

// "3 1 4 2 1 1"
std::string format_assignment_plain(const Assignment& s);
// "(3, 1, 4, 2, 1, 1)"
std::string format_assignment_cop(const Assignment& s);
// "x_13 = x_21 = x_34 = x_42 = x_51 = x_61 = 1"
std::string format_assignment_xform(const Assignment& s);

} // namespace gqap
