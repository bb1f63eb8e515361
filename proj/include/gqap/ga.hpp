#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gqap/evaluation.hpp"
#include "gqap/rng.hpp"

namespace gqap {

struct GaParams {
    int n_pop = 10;                        // population size, >= 2
    int max_k = 100;                       // stall limit on accepted children without improvement
    long max_iter = 100000;                // hard iteration cap
    std::uint64_t seed = 0;                // root of all randomness for the run
    double sentinel_fitness = 9'999'999.0; // reported best cost while no feasible member exists
    int tournament_retry_cap = 50;         // attempts to find a distinct second parent
};

void validate_params(const GaParams& params);

using Population = std::vector<EvaluatedAssignment>;

enum class StopReason { IterCap, Stall };

struct GaResult {
    Assignment best_assignment;
    double z_best = 0.0;          // best feasible cost found, sentinel if none
    bool found_feasible = false;
    long iterations_run = 0;
    int k_at_stop = 0;
    StopReason stop_reason = StopReason::Stall;
    std::vector<std::pair<long, double>> improvement_trace; // (iteration, z_best)
    double elapsed_seconds = 0.0;
};

struct BestMember {
    int index = -1;
    Assignment assignment;
    double z = 0.0;
    bool feasible = false;
};

struct TournamentDraw {
    int first = -1;   // member indices in draw order
    int second = -1;
    int winner = -1;  // the lower-fitness of the two; tie goes to first
};

// n_pop members, every slot uniform over 1..N. Members may be infeasible
// and duplicates are allowed at this stage.
Population init_population(const GqapInstance& inst, const GaParams& params, Rng& rng);

// Best member: minimum fitness among feasible members (tie: lowest index);
// when no member is feasible, the minimum-unfitness member with
// z = sentinel_fitness.
BestMember best_of(const Population& pop, const GaParams& params);

// One tournament: two distinct member indices drawn uniformly, selection by
// fitness only (unfitness plays no part).
TournamentDraw hold_tournament(const Population& pop, Rng& rng);

// Two tournaments produce the mating pair. The second repeats until its
// winner's genotype differs from parent1's, up to tournament_retry_cap
// attempts; exhaustion abandons the iteration (nullopt, not an error).
std::optional<std::pair<Assignment, Assignment>>
tournament_pair(const Population& pop, Rng& rng, const GaParams& params);

// Deterministic one-point crossover: child takes genes 1..cut from one
// parent and the rest from the other. cut in 1..M-1.
Assignment crossover_at(const Assignment& p1, const Assignment& p2, int cut, bool p1_prefix);

// Random crossover: cut uniform in 1..M-1, then a fair coin for which
// parent contributes the prefix.
Assignment one_point_crossover(const Assignment& p1, const Assignment& p2, Rng& rng);

// Exchange genes at 1-based positions j1 < j2. Second member of the result
// reports whether the child actually changed (equal genes mean no mutation).
std::pair<Assignment, bool> swap_genes_at(const Assignment& child, int j1, int j2);

// Random swap mutation: j1 uniform in 1..M-1, then j2 uniform in j1+1..M.
std::pair<Assignment, bool> swap_mutation(const Assignment& child, Rng& rng);

// Repair pass over overused locations in ascending index order. For each,
// one machine assigned there is drawn uniformly; it moves to the underused
// location with the greatest spare capacity (tie: lowest index) when that
// spare covers its requirement, else it stays. Spare capacities are
// recomputed after every move. Never increases unfitness; feasible children
// are returned untouched.
Assignment repair_unfit(const GqapInstance& inst, const Assignment& child, Rng& rng);

// Steady-state replacement. A child whose genotype already appears in the
// population is rejected. Otherwise it replaces the maximum-unfitness
// member when any member is infeasible; in an all-feasible population a
// feasible child replaces the maximum-fitness member and an infeasible
// child is discarded. Ties break to the lowest index. Returns whether the
// child entered the population.
bool replace_into(Population& pop, const EvaluatedAssignment& child);

// The full steady-state run: init, then select/crossover/mutate/repair/
// replace until max_iter iterations or max_k accepted children in a row
// without improvement. Deterministic given (inst, params) except for
// elapsed_seconds. All randomness comes from one stream seeded with
// params.seed; the draw order is: initialization (members in order, genes
// in order), then per iteration: tournament one, tournament two (with
// retries), crossover cut, crossover orientation, mutation positions,
// repair machine choices.
GaResult run_ga(const GqapInstance& inst, const GaParams& params);

} // namespace gqap
