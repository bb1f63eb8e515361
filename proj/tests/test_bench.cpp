#include "doctest.h"

#include <set>
#include <sstream>
#include <tuple>

#include "gqap/bench.hpp"
#include "gqap/exact.hpp"
#include "test_helpers.hpp"

using namespace gqap;

TEST_CASE("replicate seeds differ across the grid and reproduce exactly") {
    std::set<std::uint64_t> seen;
    for (int n_pop : {5, 10, 15})
        for (int max_k : {10, 40, 70})
            for (int rep = 1; rep <= 3; ++rep)
                seen.insert(replicate_seed(42, n_pop, max_k, rep));
    CHECK(seen.size() == 27);
    CHECK(replicate_seed(42, 5, 10, 1) == replicate_seed(42, 5, 10, 1));
    CHECK(replicate_seed(42, 5, 10, 1) != replicate_seed(43, 5, 10, 1));
}

TEST_CASE("grid validation") {
    DoeGrid grid;
    CHECK_THROWS_WITH_AS(validate_grid(grid), doctest::Contains("at least one level"), GqapError);
    grid.n_pop_levels = {5};
    grid.max_k_levels = {10};
    CHECK_NOTHROW(validate_grid(grid));
    grid.replicates = 0;
    CHECK_THROWS_AS(validate_grid(grid), GqapError);
    grid.replicates = 1;
    grid.n_pop_levels = {1};
    CHECK_THROWS_AS(validate_grid(grid), GqapError);
}

TEST_CASE("solve_instance runs the GA and then descends") {
    GqapInstance inst = generate_random_instance(6, 4, 31);
    SolveOptions opts;
    opts.seed = 5;
    opts.z_reference = brute_force_optimum(inst).z_opt;
    RunRecord rec = solve_instance(inst, opts);
    CHECK(rec.instance_name == inst.name);
    REQUIRE(rec.feasible);
    CHECK(rec.z_best_after_ls <= rec.z_best_ga);
    CHECK(rec.z_best_after_ls >= *opts.z_reference);
    CHECK(total_cost(inst, rec.best_assignment) == rec.z_best_after_ls);
    REQUIRE(rec.percent_dev.has_value());
    CHECK(*rec.percent_dev ==
          doctest::Approx(percent_deviation(rec.z_best_after_ls, *opts.z_reference)));

    SolveOptions no_ls = opts;
    no_ls.local_search = false;
    RunRecord raw = solve_instance(inst, no_ls);
    CHECK(raw.z_best_after_ls == raw.z_best_ga);
}

TEST_CASE("solve_instance without a reference leaves the deviation unset") {
    GqapInstance inst = generate_random_instance(5, 3, 77);
    SolveOptions opts;
    RunRecord rec = solve_instance(inst, opts);
    CHECK_FALSE(rec.z_reference.has_value());
    CHECK_FALSE(rec.percent_dev.has_value());
}

TEST_CASE("solve_instance carries the sentinel when nothing is feasible") {
    GqapInstance inst = testutil::make_instance(2, 2, std::vector<double>(4, 1.0),
                                                std::vector<double>(4, 0.0),
                                                std::vector<double>(4, 0.0), {5, 5}, {4, 4});
    inst.name = "hopeless";
    SolveOptions opts;
    opts.max_iter = 300;
    opts.z_reference = 100.0;
    RunRecord rec = solve_instance(inst, opts);
    CHECK_FALSE(rec.feasible);
    CHECK(rec.z_best_ga == 9'999'999.0);
    CHECK(rec.z_best_after_ls == 9'999'999.0);
    CHECK_FALSE(rec.percent_dev.has_value()); // rendered as n/a in CSV
    std::ostringstream out;
    write_run_csv(out, rec);
    auto fields = testutil::split_csv_line(testutil::split_lines(out.str())[0]);
    REQUIRE(fields.size() == 12);
    CHECK(fields[6] == "9999999");
    CHECK(fields[7] == "9999999");
    CHECK(fields[9] == "0");
    CHECK(fields[10] == "100");
    CHECK(fields[11] == "n/a");
}

TEST_CASE("csv header and row shape") {
    CHECK(csv_header() ==
          "instance,n_pop,max_k,replicate,seed,elapsed_seconds,z_best_ga,z_best_after_ls,"
          "best_assignment,feasible,z_reference,percent_dev");

    RunRecord rec;
    rec.instance_name = "demo";
    rec.n_pop = 5;
    rec.max_k = 10;
    rec.replicate = 2;
    rec.seed = 99;
    rec.elapsed_seconds = 0.1234;
    rec.z_best_ga = 17223;
    rec.z_best_after_ls = 17165;
    rec.best_assignment = {3, 1, 4, 2, 1, 1};
    rec.feasible = true;
    rec.z_reference = 17165.0;
    rec.percent_dev = percent_deviation(17165, 17165);
    std::ostringstream out;
    write_run_csv(out, rec);
    CHECK(out.str() == "demo,5,10,2,99,0.123,17223,17165,3 1 4 2 1 1,1,17165,0.00\n");

    std::ostringstream best;
    write_run_csv(best, rec, "best");
    CHECK(testutil::split_csv_line(testutil::split_lines(best.str())[0])[3] == "best");

    rec.z_reference.reset();
    rec.percent_dev.reset();
    std::ostringstream bare;
    write_run_csv(bare, rec);
    auto fields = testutil::split_csv_line(testutil::split_lines(bare.str())[0]);
    CHECK(fields[10] == "");
    CHECK(fields[11] == "");
}

TEST_CASE("percent_dev column always carries two decimals") {
    GqapInstance inst = generate_random_instance(5, 3, 3);
    double z_ref = brute_force_optimum(inst).z_opt;
    DoeGrid grid;
    grid.n_pop_levels = {6};
    grid.max_k_levels = {30};
    grid.replicates = 2;
    std::ostringstream out;
    write_doe_csv(out, run_doe(inst, grid, z_ref));
    auto lines = testutil::split_lines(out.str());
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::string dev = testutil::split_csv_line(lines[i]).at(11);
        if (dev == "n/a")
            continue;
        auto dot = dev.find('.');
        REQUIRE(dot != std::string::npos);
        CHECK(dev.size() - dot - 1 == 2);
    }
}

TEST_CASE("doe produces the full sorted grid plus one summary row per cell") {
    GqapInstance inst = generate_random_instance(6, 4, 8);
    DoeGrid grid;
    grid.n_pop_levels = {10, 5, 15};
    grid.max_k_levels = {40, 10, 70};
    grid.replicates = 3;
    grid.base_seed = 4;
    DoeReport report = run_doe(inst, grid, std::nullopt);
    REQUIRE(report.runs.size() == 27);
    REQUIRE(report.cell_best.size() == 9);

    // sorted by (n_pop, max_k, replicate) regardless of the level order given
    for (std::size_t i = 1; i < report.runs.size(); ++i) {
        const RunRecord& a = report.runs[i - 1];
        const RunRecord& b = report.runs[i];
        CHECK(std::tie(a.n_pop, a.max_k, a.replicate) < std::tie(b.n_pop, b.max_k, b.replicate));
    }
    for (const RunRecord& rec : report.runs)
        CHECK(rec.seed == replicate_seed(4, rec.n_pop, rec.max_k, rec.replicate));

    // the cell winner is the best replicate by feasibility then cost
    for (const RunRecord& best : report.cell_best)
        for (const RunRecord& rec : report.runs) {
            if (rec.n_pop != best.n_pop || rec.max_k != best.max_k)
                continue;
            if (best.feasible) {
                if (rec.feasible) {
                    CHECK(best.z_best_after_ls <= rec.z_best_after_ls);
                    if (rec.z_best_after_ls == best.z_best_after_ls)
                        CHECK(best.replicate <= rec.replicate);
                }
            } else {
                CHECK_FALSE(rec.feasible);
            }
        }

    std::ostringstream out;
    write_doe_csv(out, report);
    auto lines = testutil::split_lines(out.str());
    REQUIRE(lines.size() == 1 + 27 + 9);
    CHECK(lines[0] == csv_header());
    for (int i = 28; i <= 36; ++i)
        CHECK(testutil::split_csv_line(lines[i])[3] == "best");
}

TEST_CASE("a 1x1x1 grid is a single row") {
    GqapInstance inst = generate_random_instance(4, 3, 12);
    DoeGrid grid;
    grid.n_pop_levels = {8};
    grid.max_k_levels = {20};
    grid.replicates = 1;
    DoeReport report = run_doe(inst, grid, std::nullopt);
    CHECK(report.runs.size() == 1);
    CHECK(report.cell_best.size() == 1);
    CHECK(report.cell_best[0].replicate == report.runs[0].replicate);
}

TEST_CASE("doe reruns are identical after masking elapsed time") {
    GqapInstance inst = generate_random_instance(6, 4, 21);
    DoeGrid grid;
    grid.n_pop_levels = {5, 10};
    grid.max_k_levels = {10, 40};
    grid.replicates = 2;
    grid.base_seed = 7;
    double z_ref = brute_force_optimum(inst).z_opt;

    std::ostringstream a, b;
    write_doe_csv(a, run_doe(inst, grid, z_ref));
    write_doe_csv(b, run_doe(inst, grid, z_ref));
    CHECK(testutil::mask_elapsed(a.str()) == testutil::mask_elapsed(b.str()));
}
