#include "gqap/ga.hpp"

#include <algorithm>
#include <chrono>

namespace gqap {

void validate_params(const GaParams& params) {
    if (params.n_pop < 2)
        throw GqapError("population size must be at least 2");
    if (params.max_k < 1)
        throw GqapError("max_k must be at least 1");
    if (params.max_iter < 1)
        throw GqapError("max_iter must be at least 1");
    if (!(params.sentinel_fitness > 0))
        throw GqapError("sentinel fitness must be positive");
    if (params.tournament_retry_cap < 1)
        throw GqapError("tournament retry cap must be at least 1");
}

Population init_population(const GqapInstance& inst, const GaParams& params, Rng& rng) {
    validate_instance(inst);
    validate_params(params);
    Population pop;
    pop.reserve(params.n_pop);
    for (int n = 0; n < params.n_pop; ++n) {
        Assignment s(inst.machine_count);
        for (int& slot : s)
            slot = rng.uniform_int(1, inst.location_count);
        pop.push_back(evaluate(inst, s));
    }
    return pop;
}

BestMember best_of(const Population& pop, const GaParams& params) {
    BestMember best;
    int best_feasible = -1;
    int least_unfit = -1;
    for (int i = 0; i < static_cast<int>(pop.size()); ++i) {
        const EvaluatedAssignment& m = pop[i];
        if (m.feasible()) {
            if (best_feasible < 0 || m.fitness < pop[best_feasible].fitness)
                best_feasible = i;
        }
        if (least_unfit < 0 || m.unfitness < pop[least_unfit].unfitness)
            least_unfit = i;
    }
    if (best_feasible >= 0) {
        best.index = best_feasible;
        best.assignment = pop[best_feasible].assignment;
        best.z = pop[best_feasible].fitness;
        best.feasible = true;
    } else {
        best.index = least_unfit;
        best.assignment = pop[least_unfit].assignment;
        best.z = params.sentinel_fitness;
        best.feasible = false;
    }
    return best;
}

TournamentDraw hold_tournament(const Population& pop, Rng& rng) {
    TournamentDraw draw;
    auto [a, b] = rng.distinct_pair(static_cast<int>(pop.size()));
    draw.first = a;
    draw.second = b;
    draw.winner = pop[a].fitness <= pop[b].fitness ? a : b;
    return draw;
}

std::optional<std::pair<Assignment, Assignment>>
tournament_pair(const Population& pop, Rng& rng, const GaParams& params) {
    const Assignment& parent1 = pop[hold_tournament(pop, rng).winner].assignment;
    for (int attempt = 0; attempt < params.tournament_retry_cap; ++attempt) {
        const Assignment& candidate = pop[hold_tournament(pop, rng).winner].assignment;
        if (candidate != parent1)
            return std::make_pair(parent1, candidate);
    }
    return std::nullopt; // only clones of parent1 win; give up on this iteration
}

Assignment crossover_at(const Assignment& p1, const Assignment& p2, int cut, bool p1_prefix) {
    const int m = static_cast<int>(p1.size());
    if (m < 2 || p2.size() != p1.size())
        throw GqapError("crossover needs two equal-length parents with at least 2 genes");
    if (cut < 1 || cut > m - 1)
        throw GqapError("crossover point out of range");
    const Assignment& head = p1_prefix ? p1 : p2;
    const Assignment& tail = p1_prefix ? p2 : p1;
    Assignment child(head.begin(), head.begin() + cut);
    child.insert(child.end(), tail.begin() + cut, tail.end());
    return child;
}

Assignment one_point_crossover(const Assignment& p1, const Assignment& p2, Rng& rng) {
    if (p1.size() < 2)
        throw GqapError("crossover needs two equal-length parents with at least 2 genes");
    int cut = rng.uniform_int(1, static_cast<int>(p1.size()) - 1);
    bool p1_prefix = rng.uniform_int(1, 2) == 1;
    return crossover_at(p1, p2, cut, p1_prefix);
}

std::pair<Assignment, bool> swap_genes_at(const Assignment& child, int j1, int j2) {
    const int m = static_cast<int>(child.size());
    if (m < 2)
        throw GqapError("mutation needs at least 2 genes");
    if (j1 < 1 || j2 <= j1 || j2 > m)
        throw GqapError("mutation positions out of range");
    Assignment mutated = child;
    std::swap(mutated[j1 - 1], mutated[j2 - 1]);
    return {mutated, mutated[j1 - 1] != mutated[j2 - 1]};
}

std::pair<Assignment, bool> swap_mutation(const Assignment& child, Rng& rng) {
    const int m = static_cast<int>(child.size());
    if (m < 2)
        throw GqapError("mutation needs at least 2 genes");
    int j1 = rng.uniform_int(1, m - 1);
    int j2 = rng.uniform_int(j1 + 1, m);
    return swap_genes_at(child, j1, j2);
}

namespace {

// load minus capacity per location; positive entries are overused.
std::vector<double> extra_caps(const GqapInstance& inst, const Assignment& s) {
    std::vector<double> extra = location_loads(inst, s);
    for (int k = 0; k < inst.location_count; ++k)
        extra[k] -= inst.capacity[k];
    return extra;
}

} // namespace

Assignment repair_unfit(const GqapInstance& inst, const Assignment& child, Rng& rng) {
    validate_assignment(inst, child);
    std::vector<double> extra = extra_caps(inst, child);
    bool any_over = false;
    for (double e : extra)
        any_over = any_over || e > 0;
    if (!any_over)
        return child;

    // the overused set is fixed up front; spare capacities are re-derived
    // after every successful move
    std::vector<int> overused;
    for (int k = 0; k < inst.location_count; ++k)
        if (extra[k] > 0)
            overused.push_back(k + 1);

    Assignment repaired = child;
    for (int loc : overused) {
        std::vector<int> machines;
        for (int i = 0; i < inst.machine_count; ++i)
            if (repaired[i] == loc)
                machines.push_back(i + 1);
        if (machines.empty())
            continue;
        int machine = machines[rng.uniform_int(0, static_cast<int>(machines.size()) - 1)];

        // underused location with the greatest spare (most negative extra),
        // lowest index on ties
        int target = 0;
        double target_extra = 0.0;
        for (int k = 0; k < inst.location_count; ++k)
            if (extra[k] < 0 && (target == 0 || extra[k] < target_extra)) {
                target = k + 1;
                target_extra = extra[k];
            }
        if (target == 0)
            continue;
        if (-target_extra < inst.requirement[machine - 1])
            continue; // not enough spare anywhere; the machine stays put
        repaired[machine - 1] = target;
        extra = extra_caps(inst, repaired);
    }
    return repaired;
}

bool replace_into(Population& pop, const EvaluatedAssignment& child) {
    for (const EvaluatedAssignment& member : pop)
        if (member.assignment == child.assignment)
            return false; // duplicate genotype

    int worst_unfit = -1;
    for (int i = 0; i < static_cast<int>(pop.size()); ++i)
        if (pop[i].unfitness > 0 &&
            (worst_unfit < 0 || pop[i].unfitness > pop[worst_unfit].unfitness))
            worst_unfit = i;
    if (worst_unfit >= 0) {
        pop[worst_unfit] = child;
        return true;
    }

    // all members feasible: a feasible child evicts the costliest member,
    // an infeasible one is discarded
    if (!child.feasible())
        return false;
    int worst_fit = 0;
    for (int i = 1; i < static_cast<int>(pop.size()); ++i)
        if (pop[i].fitness > pop[worst_fit].fitness)
            worst_fit = i;
    pop[worst_fit] = child;
    return true;
}

GaResult run_ga(const GqapInstance& inst, const GaParams& params) {
    validate_instance(inst);
    validate_params(params);
    if (inst.machine_count < 2)
        throw GqapError("the genetic algorithm needs at least 2 machines");

    const auto started = std::chrono::steady_clock::now();
    Rng rng(params.seed);
    GaResult result;

    Population pop = init_population(inst, params, rng);
    BestMember best = best_of(pop, params);
    result.best_assignment = best.assignment;
    result.z_best = best.z;
    result.found_feasible = best.feasible;
    result.improvement_trace.emplace_back(0, best.z);

    long iter = 0;
    int k_iter = 0;
    while (iter < params.max_iter && k_iter < params.max_k) {
        ++iter;
        auto parents = tournament_pair(pop, rng, params);
        if (!parents)
            continue;
        Assignment child = one_point_crossover(parents->first, parents->second, rng);
        child = swap_mutation(child, rng).first;
        child = repair_unfit(inst, child, rng);
        EvaluatedAssignment child_eval = evaluate(inst, child);
        if (!replace_into(pop, child_eval))
            continue; // duplicates and discarded children leave k untouched

        BestMember now = best_of(pop, params);
        bool improved = now.feasible && (!result.found_feasible || now.z < result.z_best);
        if (improved) {
            result.best_assignment = now.assignment;
            result.z_best = now.z;
            result.found_feasible = true;
            result.improvement_trace.emplace_back(iter, now.z);
            k_iter = 0;
        } else {
            ++k_iter;
        }
    }

    result.iterations_run = iter;
    result.k_at_stop = k_iter;
    result.stop_reason = k_iter >= params.max_k ? StopReason::Stall : StopReason::IterCap;
    if (!result.found_feasible) {
        BestMember fallback = best_of(pop, params);
        result.best_assignment = fallback.assignment;
        result.z_best = params.sentinel_fitness;
    }
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

} // namespace gqap
