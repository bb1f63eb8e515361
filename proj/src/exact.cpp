#include "gqap/exact.hpp"

#include <cmath>
#include <sstream>

namespace gqap {

ModelStats model_statistics(int machines, int locations) {
    if (machines < 1 || locations < 1)
        throw GqapError("model statistics need M >= 1 and N >= 1");
    const long long m = machines;
    const long long n = locations;
    const long long pairs = m * (m - 1) * n * (n - 1); // ordered (i,j,k,l), j != i, l != k
    ModelStats stats;
    stats.binaries = m * n;
    stats.variables = m * n + pairs;
    stats.constraints = m + n + pairs;
    return stats;
}

namespace {

struct Search {
    const GqapInstance& inst;
    Assignment slots;              // 1-based, grown left to right
    std::vector<double> load;
    long long feasible_count = 0;
    long long enumerated = 0;
    bool found = false;
    Assignment best;
    double best_cost = 0.0;

    explicit Search(const GqapInstance& i)
        : inst(i), slots(i.machine_count, 0), load(i.location_count, 0.0) {}

    void descend(int machine) {
        if (machine == inst.machine_count) {
            ++enumerated;
            ++feasible_count; // pruning removed every infeasible subtree
            double cost = total_cost(inst, slots);
            if (!found || cost < best_cost) { // lexicographic order makes ties keep the first
                found = true;
                best = slots;
                best_cost = cost;
            }
            return;
        }
        for (int k = 1; k <= inst.location_count; ++k) {
            load[k - 1] += inst.requirement[machine];
            if (load[k - 1] <= inst.capacity[k - 1]) {
                slots[machine] = k;
                descend(machine + 1);
            }
            load[k - 1] -= inst.requirement[machine];
        }
    }
};

} // namespace

ExactResult brute_force_optimum(const GqapInstance& inst, long long limit) {
    validate_instance(inst);
    long long space = 1;
    for (int i = 0; i < inst.machine_count; ++i) {
        if (space > limit / inst.location_count) {
            std::ostringstream msg;
            msg << "search space " << inst.location_count << "^" << inst.machine_count << " = "
                << std::pow(static_cast<double>(inst.location_count), inst.machine_count)
                << " assignments exceeds limit " << limit;
            throw GqapError(msg.str());
        }
        space *= inst.location_count;
    }

    Search search(inst);
    search.descend(0);
    if (!search.found)
        throw GqapError("no feasible assignment exists for instance '" + inst.name + "'");

    ExactResult result;
    result.optimum = search.best;
    result.z_opt = search.best_cost;
    result.feasible_count = search.feasible_count;
    result.enumerated = search.enumerated;
    return result;
}

namespace {

// Term writer that wraps long expressions; continuation lines are indented
// so LP readers treat them as one row.
class TermLine {
  public:
    explicit TermLine(std::ostream& out) : out_(out) {}

    void add(double coeff, const std::string& var) {
        std::string term;
        if (coeff == 1)
            term = first_ ? var : "+ " + var;
        else if (coeff == -1)
            term = "- " + var;
        else if (coeff < 0)
            term = "- " + format_number(-coeff) + " " + var;
        else
            term = (first_ ? "" : "+ ") + format_number(coeff) + " " + var;
        if (on_line_ == 8) {
            out_ << "\n     ";
            on_line_ = 0;
        } else {
            out_ << " ";
        }
        out_ << term;
        ++on_line_;
        first_ = false;
    }

    bool empty() const { return first_; }

  private:
    std::ostream& out_;
    bool first_ = true;
    int on_line_ = 0;
};

std::string x_name(int i, int k) {
    return "x_" + std::to_string(i) + "_" + std::to_string(k);
}

std::string w_name(int i, int j, int k, int l) {
    return "w_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k) + "_" +
           std::to_string(l);
}

} // namespace

std::string write_lp(const GqapInstance& inst, bool counting_mode) {
    validate_instance(inst);
    const int m = inst.machine_count;
    const int n = inst.location_count;
    auto keep = [&](int i, int j, int k, int l) {
        return counting_mode ||
               inst.unit_cost * inst.flow(i - 1, j - 1) * inst.distance(k - 1, l - 1) != 0;
    };

    std::ostringstream out;
    out << "\\ GQAP linearized model";
    if (!inst.name.empty())
        out << ": " << inst.name;
    out << " (M=" << m << ", N=" << n << ")\n";

    out << "Minimize\n obj:";
    {
        TermLine obj(out);
        for (int i = 1; i <= m; ++i)
            for (int k = 1; k <= n; ++k)
                obj.add(inst.assign_cost(i - 1, k - 1), x_name(i, k));
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) {
                if (j == i)
                    continue;
                for (int k = 1; k <= n; ++k)
                    for (int l = 1; l <= n; ++l) {
                        if (l == k || !keep(i, j, k, l))
                            continue;
                        obj.add(inst.unit_cost * inst.flow(i - 1, j - 1) *
                                    inst.distance(k - 1, l - 1),
                                w_name(i, j, k, l));
                    }
            }
        if (obj.empty())
            obj.add(0, x_name(1, 1));
    }
    out << "\n";

    out << "Subject To\n";
    for (int i = 1; i <= m; ++i) {
        out << " asg_" << i << ":";
        TermLine row(out);
        for (int k = 1; k <= n; ++k)
            row.add(1, x_name(i, k));
        out << " = 1\n";
    }
    for (int k = 1; k <= n; ++k) {
        out << " cap_" << k << ":";
        TermLine row(out);
        for (int i = 1; i <= m; ++i)
            if (inst.requirement[i - 1] != 0)
                row.add(inst.requirement[i - 1], x_name(i, k));
        if (row.empty())
            row.add(0, x_name(1, k));
        out << " <= " << format_number(inst.capacity[k - 1]) << "\n";
    }
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            if (j == i)
                continue;
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    if (l == k || !keep(i, j, k, l))
                        continue;
                    out << " lnk_" << i << "_" << j << "_" << k << "_" << l << ": " << x_name(i, k)
                        << " + " << x_name(j, l) << " - " << w_name(i, j, k, l) << " <= 1\n";
                }
        }

    out << "Binary\n";
    int on_line = 0;
    for (int i = 1; i <= m; ++i)
        for (int k = 1; k <= n; ++k) {
            out << " " << x_name(i, k);
            if (++on_line == 10) {
                out << "\n";
                on_line = 0;
            }
        }
    if (on_line)
        out << "\n";
    out << "End\n";
    return out.str();
}

} // namespace gqap
