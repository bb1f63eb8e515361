#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gqap/ga.hpp"

namespace gqap {

struct SolveOptions {
    int n_pop = 10;
    int max_k = 100;
    long max_iter = 100000;
    std::uint64_t seed = 0;
    bool local_search = true;
    std::optional<double> z_reference; // best known cost, for percent deviation
};

// One benchmark row. When the GA never finds a feasible solution the z
// columns carry the sentinel and percent_dev is absent.
struct RunRecord {
    std::string instance_name;
    int n_pop = 0;
    int max_k = 0;
    int replicate = 1;
    std::uint64_t seed = 0;
    double elapsed_seconds = 0.0;
    double z_best_ga = 0.0;
    double z_best_after_ls = 0.0;
    Assignment best_assignment;
    bool feasible = false;
    std::optional<double> z_reference;
    std::optional<double> percent_dev;
};

// GA followed by steepest descent on its best feasible solution.
RunRecord solve_instance(const GqapInstance& inst, const SolveOptions& opts);

// Two-factor parameter study: every (n_pop, max_k) cell is run `replicates`
// times with seeds derived from base_seed.
struct DoeGrid {
    std::vector<int> n_pop_levels;
    std::vector<int> max_k_levels;
    int replicates = 3;
    std::uint64_t base_seed = 0;
    long max_iter = 100000;
    bool local_search = true;
};

void validate_grid(const DoeGrid& grid);

// seed = splitmix64(splitmix64(splitmix64(base ^ n_pop) ^ max_k) ^ replicate);
// cells and replicates get independent, reproducible streams.
std::uint64_t replicate_seed(std::uint64_t base_seed, int n_pop, int max_k, int replicate);

struct DoeReport {
    std::vector<RunRecord> runs;      // sorted by (n_pop, max_k, replicate)
    std::vector<RunRecord> cell_best; // one per (n_pop, max_k) cell, same order
};

// Runs the whole grid. The per-cell best replicate is the feasible one with
// the lowest z_best_after_ls (equivalently lowest percent deviation),
// replicate index breaking ties; elapsed time is reported but never
// compared, so reruns pick identical winners.
DoeReport run_doe(const GqapInstance& inst, const DoeGrid& grid,
                  std::optional<double> z_reference);

// CSV: comma separated, '.' decimal point, no thousands separators.
// Columns: instance,n_pop,max_k,replicate,seed,elapsed_seconds,z_best_ga,
// z_best_after_ls,best_assignment,feasible,z_reference,percent_dev.
// best_assignment is space separated; feasible is 1/0; percent_dev is
// rendered to two decimals, "n/a" for infeasible rows with a reference, and
// empty (like z_reference) when no reference was given. Summary rows repeat
// the winning replicate with "best" in the replicate column, after all data
// rows.
std::string csv_header();
void write_run_csv(std::ostream& out, const RunRecord& rec,
                   const std::string& replicate_label = "");
void write_doe_csv(std::ostream& out, const DoeReport& report);

} // namespace gqap
