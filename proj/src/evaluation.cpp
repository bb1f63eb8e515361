#include "gqap/evaluation.hpp"

#include <sstream>

namespace gqap {

void validate_assignment(const GqapInstance& inst, const Assignment& s) {
    if (s.size() != static_cast<std::size_t>(inst.machine_count)) {
        std::ostringstream msg;
        msg << "assignment length " << s.size() << " does not match machine count "
            << inst.machine_count;
        throw GqapError(msg.str());
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > inst.location_count) {
            std::ostringstream msg;
            msg << "machine " << i + 1 << " assigned to location " << s[i] << ", valid range is 1.."
                << inst.location_count;
            throw GqapError(msg.str());
        }
    }
}

double total_cost(const GqapInstance& inst, const Assignment& s) {
    validate_assignment(inst, s);
    const int m = inst.machine_count;
    double assign = 0.0;
    for (int i = 0; i < m; ++i)
        assign += inst.assign_cost(i, s[i] - 1);
    double transport = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (j == i)
                continue;
            transport += inst.flow(i, j) * inst.distance(s[i] - 1, s[j] - 1);
        }
    return assign + inst.unit_cost * transport;
}

std::vector<double> location_loads(const GqapInstance& inst, const Assignment& s) {
    validate_assignment(inst, s);
    std::vector<double> loads(inst.location_count, 0.0);
    for (int i = 0; i < inst.machine_count; ++i)
        loads[s[i] - 1] += inst.requirement[i];
    return loads;
}

double unfitness_of(const GqapInstance& inst, const Assignment& s) {
    std::vector<double> loads = location_loads(inst, s);
    double overuse = 0.0;
    for (int k = 0; k < inst.location_count; ++k)
        if (loads[k] > inst.capacity[k])
            overuse += loads[k] - inst.capacity[k];
    return overuse;
}

EvaluatedAssignment evaluate(const GqapInstance& inst, const Assignment& s) {
    EvaluatedAssignment out;
    out.assignment = s;
    out.fitness = total_cost(inst, s);
    out.loads = location_loads(inst, s);
    out.unfitness = 0.0;
    for (int k = 0; k < inst.location_count; ++k)
        if (out.loads[k] > inst.capacity[k])
            out.unfitness += out.loads[k] - inst.capacity[k];
    return out;
}

double percent_deviation(double z, double z_ref) {
    if (!(z_ref > 0))
        throw GqapError("percent deviation needs a positive reference value");
    return 100.0 * (z - z_ref) / z_ref;
}

std::string format_assignment_plain(const Assignment& s) {
    std::ostringstream out;
    for (std::size_t i = 0; i < s.size(); ++i)
        out << (i ? " " : "") << s[i];
    return out.str();
}

std::string format_assignment_cop(const Assignment& s) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < s.size(); ++i)
        out << (i ? ", " : "") << s[i];
    out << ")";
    return out.str();
}

std::string format_assignment_xform(const Assignment& s) {
    std::ostringstream out;
    for (std::size_t i = 0; i < s.size(); ++i)
        out << (i ? " = " : "") << "x_" << i + 1 << s[i];
    out << " = 1";
    return out.str();
}

} // namespace gqap
