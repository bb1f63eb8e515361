#include "gqap/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>

#include "gqap/local_search.hpp"

namespace gqap {

RunRecord solve_instance(const GqapInstance& inst, const SolveOptions& opts) {
    const auto started = std::chrono::steady_clock::now();
    GaParams params;
    params.n_pop = opts.n_pop;
    params.max_k = opts.max_k;
    params.max_iter = opts.max_iter;
    params.seed = opts.seed;
    GaResult ga = run_ga(inst, params);

    RunRecord rec;
    rec.instance_name = inst.name;
    rec.n_pop = opts.n_pop;
    rec.max_k = opts.max_k;
    rec.seed = opts.seed;
    rec.feasible = ga.found_feasible;
    rec.z_best_ga = ga.z_best;
    rec.z_best_after_ls = ga.z_best;
    rec.best_assignment = ga.best_assignment;
    rec.z_reference = opts.z_reference;

    if (ga.found_feasible && opts.local_search) {
        auto [improved, cost] = steepest_descent(inst, ga.best_assignment);
        rec.z_best_after_ls = cost;
        rec.best_assignment = std::move(improved);
    }
    if (rec.feasible && rec.z_reference)
        rec.percent_dev = percent_deviation(rec.z_best_after_ls, *rec.z_reference);
    rec.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return rec;
}

void validate_grid(const DoeGrid& grid) {
    if (grid.n_pop_levels.empty() || grid.max_k_levels.empty())
        throw GqapError("DOE grid needs at least one level per factor");
    if (grid.replicates < 1)
        throw GqapError("DOE grid needs at least one replicate");
    for (int v : grid.n_pop_levels)
        if (v < 2)
            throw GqapError("population levels must be at least 2");
    for (int v : grid.max_k_levels)
        if (v < 1)
            throw GqapError("max_k levels must be at least 1");
}

std::uint64_t replicate_seed(std::uint64_t base_seed, int n_pop, int max_k, int replicate) {
    std::uint64_t s = splitmix64(base_seed ^ static_cast<std::uint64_t>(n_pop));
    s = splitmix64(s ^ static_cast<std::uint64_t>(max_k));
    return splitmix64(s ^ static_cast<std::uint64_t>(replicate));
}

DoeReport run_doe(const GqapInstance& inst, const DoeGrid& grid,
                  std::optional<double> z_reference) {
    validate_grid(grid);
    std::vector<int> n_pops = grid.n_pop_levels;
    std::vector<int> max_ks = grid.max_k_levels;
    std::sort(n_pops.begin(), n_pops.end());
    std::sort(max_ks.begin(), max_ks.end());

    DoeReport report;
    for (int n_pop : n_pops)
        for (int max_k : max_ks) {
            int best = -1;
            for (int rep = 1; rep <= grid.replicates; ++rep) {
                SolveOptions opts;
                opts.n_pop = n_pop;
                opts.max_k = max_k;
                opts.max_iter = grid.max_iter;
                opts.local_search = grid.local_search;
                opts.seed = replicate_seed(grid.base_seed, n_pop, max_k, rep);
                opts.z_reference = z_reference;
                RunRecord rec = solve_instance(inst, opts);
                rec.replicate = rep;
                report.runs.push_back(std::move(rec));

                // best of the cell: feasible first, then lowest cost, then
                // earliest replicate; elapsed time is not compared
                const RunRecord& cur = report.runs.back();
                if (best < 0) {
                    best = static_cast<int>(report.runs.size()) - 1;
                } else {
                    const RunRecord& incumbent = report.runs[best];
                    if ((cur.feasible && !incumbent.feasible) ||
                        (cur.feasible == incumbent.feasible &&
                         cur.z_best_after_ls < incumbent.z_best_after_ls))
                        best = static_cast<int>(report.runs.size()) - 1;
                }
            }
            report.cell_best.push_back(report.runs[best]);
        }
    return report;
}

std::string csv_header() {
    return "instance,n_pop,max_k,replicate,seed,elapsed_seconds,z_best_ga,z_best_after_ls,"
           "best_assignment,feasible,z_reference,percent_dev";
}

void write_run_csv(std::ostream& out, const RunRecord& rec, const std::string& replicate_label) {
    char elapsed[32];
    std::snprintf(elapsed, sizeof(elapsed), "%.3f", rec.elapsed_seconds);
    out << rec.instance_name << "," << rec.n_pop << "," << rec.max_k << ","
        << (replicate_label.empty() ? std::to_string(rec.replicate) : replicate_label) << ","
        << rec.seed << "," << elapsed << "," << format_number(rec.z_best_ga) << ","
        << format_number(rec.z_best_after_ls) << "," << format_assignment_plain(rec.best_assignment)
        << "," << (rec.feasible ? 1 : 0) << ",";
    if (rec.z_reference)
        out << format_number(*rec.z_reference);
    out << ",";
    if (rec.z_reference) {
        if (rec.percent_dev) {
            char dev[32];
            std::snprintf(dev, sizeof(dev), "%.2f", *rec.percent_dev);
            out << dev;
        } else {
            out << "n/a";
        }
    }
    out << "\n";
}

void write_doe_csv(std::ostream& out, const DoeReport& report) {
    out << csv_header() << "\n";
    for (const RunRecord& rec : report.runs)
        write_run_csv(out, rec);
    for (const RunRecord& rec : report.cell_best)
        write_run_csv(out, rec, "best");
}

} // namespace gqap
