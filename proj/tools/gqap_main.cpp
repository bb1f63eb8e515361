// Command line front end: solve (GA + local search), exact (brute force),
// export-lp (MILP model), gen (random instance), doe (parameter study CSV).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gqap/bench.hpp"
#include "gqap/exact.hpp"
#include "gqap/instance.hpp"

namespace {

gqap::GqapInstance load_named(const std::string& path) {
    gqap::GqapInstance inst = gqap::load_instance(path);
    if (inst.name.empty())
        inst.name = std::filesystem::path(path).stem().string();
    return inst;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw gqap::GqapError("cannot open output file: " + path);
    out << text;
    if (!out)
        throw gqap::GqapError("write failed: " + path);
}

std::string two_decimals(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

struct SolveArgs {
    std::string instance;
    std::string output;
    int n_pop = 10;
    int max_k = 100;
    long max_iter = 100000;
    std::uint64_t seed = 0;
    bool no_local_search = false;
    double z_ref = 0.0;
    bool has_z_ref = false;
};

void cmd_solve(const SolveArgs& a) {
    gqap::GqapInstance inst = load_named(a.instance);
    gqap::SolveOptions opts;
    opts.n_pop = a.n_pop;
    opts.max_k = a.max_k;
    opts.max_iter = a.max_iter;
    opts.seed = a.seed;
    opts.local_search = !a.no_local_search;
    if (a.has_z_ref)
        opts.z_reference = a.z_ref;
    gqap::RunRecord rec = gqap::solve_instance(inst, opts);

    std::cout << "instance: " << rec.instance_name << " (" << inst.machine_count
              << " machines, " << inst.location_count << " locations)\n";
    std::cout << "n_pop=" << rec.n_pop << " max_k=" << rec.max_k << " max_iter=" << a.max_iter
              << " seed=" << rec.seed << "\n";
    if (rec.feasible) {
        std::cout << "z_best (GA): " << gqap::format_number(rec.z_best_ga) << "\n";
        std::cout << "z_best (after local search): "
                  << gqap::format_number(rec.z_best_after_ls) << "\n";
        std::cout << "best assignment: " << gqap::format_assignment_plain(rec.best_assignment)
                  << "\n";
        if (rec.percent_dev)
            std::cout << "percent deviation: " << two_decimals(*rec.percent_dev)
                      << "% (reference " << gqap::format_number(*rec.z_reference) << ")\n";
    } else {
        std::cout << "no feasible solution found; z columns carry the sentinel "
                  << gqap::format_number(rec.z_best_ga) << "\n";
    }
    std::cout << "elapsed: " << two_decimals(rec.elapsed_seconds) << " s\n";

    if (!a.output.empty()) {
        std::ostringstream csv;
        csv << gqap::csv_header() << "\n";
        gqap::write_run_csv(csv, rec);
        write_text(a.output, csv.str());
    }
}

struct ExactArgs {
    std::string instance;
    std::string output;
    long long limit = 10'000'000;
};

void cmd_exact(const ExactArgs& a) {
    gqap::GqapInstance inst = load_named(a.instance);
    gqap::ExactResult res = gqap::brute_force_optimum(inst, a.limit);
    std::ostringstream rep;
    rep << "instance: " << inst.name << "\n";
    rep << "optimum (COP): " << gqap::format_assignment_cop(res.optimum) << "\n";
    rep << "optimum (x):   " << gqap::format_assignment_xform(res.optimum) << "\n";
    rep << "z_opt: " << gqap::format_number(res.z_opt) << "\n";
    rep << "feasible assignments: " << res.feasible_count << "\n";
    rep << "leaves enumerated: " << res.enumerated << "\n";
    std::cout << rep.str();
    if (!a.output.empty())
        write_text(a.output, rep.str());
}

struct ExportArgs {
    std::string instance;
    std::string output;
    bool counting_mode = false;
};

void cmd_export_lp(const ExportArgs& a) {
    gqap::GqapInstance inst = load_named(a.instance);
    write_text(a.output, gqap::write_lp(inst, a.counting_mode));
    gqap::ModelStats st = gqap::model_statistics(inst.machine_count, inst.location_count);
    std::cout << "constraints=" << st.constraints << " variables=" << st.variables
              << " binaries=" << st.binaries << "\n";
}

struct GenArgs {
    int machines = 0;
    int locations = 0;
    std::uint64_t seed = 0;
    std::string name;
    std::string output;
};

void cmd_gen(const GenArgs& a) {
    gqap::GqapInstance inst = gqap::generate_random_instance(a.machines, a.locations, a.seed);
    if (!a.name.empty())
        inst.name = a.name;
    if (a.output.empty()) {
        std::cout << gqap::serialize_instance(inst);
    } else {
        gqap::save_instance(inst, a.output);
        std::cout << "wrote " << inst.name << " (" << a.machines << " machines, "
                  << a.locations << " locations) to " << a.output << "\n";
    }
}

struct DoeArgs {
    std::string instance;
    std::string output;
    std::vector<int> n_pop_levels;
    std::vector<int> max_k_levels;
    int replicates = 3;
    std::uint64_t seed = 0;
    long max_iter = 100000;
    bool no_local_search = false;
    double z_ref = 0.0;
    bool has_z_ref = false;
};

void cmd_doe(const DoeArgs& a) {
    gqap::GqapInstance inst = load_named(a.instance);
    gqap::DoeGrid grid;
    grid.n_pop_levels = a.n_pop_levels;
    grid.max_k_levels = a.max_k_levels;
    grid.replicates = a.replicates;
    grid.base_seed = a.seed;
    grid.max_iter = a.max_iter;
    grid.local_search = !a.no_local_search;
    std::optional<double> z_ref;
    if (a.has_z_ref)
        z_ref = a.z_ref;
    gqap::DoeReport report = gqap::run_doe(inst, grid, z_ref);
    if (a.output.empty()) {
        gqap::write_doe_csv(std::cout, report);
    } else {
        std::ostringstream csv;
        gqap::write_doe_csv(csv, report);
        write_text(a.output, csv.str());
        std::cout << "wrote " << report.runs.size() << " runs + " << report.cell_best.size()
                  << " summary rows to " << a.output << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"GQAP solver suite: genetic algorithm with repair, steepest-descent "
                 "local search, brute-force oracle, MILP export, DOE benchmarking"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand("solve", "run the GA, then local search on its best");
    solve->add_option("--instance", solve_args.instance, "instance file")->required();
    solve->add_option("--n-pop", solve_args.n_pop, "population size")->capture_default_str();
    solve->add_option("--max-k", solve_args.max_k,
                      "stop after this many accepted children without improvement")
        ->capture_default_str();
    solve->add_option("--max-iter", solve_args.max_iter, "hard iteration cap")
        ->capture_default_str();
    solve->add_option("--seed", solve_args.seed, "RNG seed")->capture_default_str();
    solve->add_flag("--no-local-search", solve_args.no_local_search,
                    "skip the descent after the GA");
    CLI::Option* solve_zref =
        solve->add_option("--z-ref", solve_args.z_ref, "best known cost, for percent deviation");
    solve->add_option("--output", solve_args.output, "also write the run as a one-row CSV");

    ExactArgs exact_args;
    CLI::App* exact = app.add_subcommand("exact", "brute-force optimum over all N^M assignments");
    exact->add_option("--instance", exact_args.instance, "instance file")->required();
    exact->add_option("--limit", exact_args.limit, "refuse when N^M exceeds this")
        ->capture_default_str();
    exact->add_option("--output", exact_args.output, "also write the report to a file");

    ExportArgs export_args;
    CLI::App* export_lp =
        app.add_subcommand("export-lp", "write the linearized MILP in CPLEX LP format");
    export_lp->add_option("--instance", export_args.instance, "instance file")->required();
    export_lp->add_option("--output", export_args.output, "LP file to write")->required();
    export_lp->add_flag("--counting-mode", export_args.counting_mode,
                        "keep zero-coefficient terms so counts match the model statistics");

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "generate a random feasible instance");
    gen->add_option("--machines,-m", gen_args.machines, "number of machines")->required();
    gen->add_option("--locations,-n", gen_args.locations, "number of locations")->required();
    gen->add_option("--seed", gen_args.seed, "RNG seed")->capture_default_str();
    gen->add_option("--name", gen_args.name, "override the generated instance label");
    gen->add_option("--output", gen_args.output, "instance file to write (default stdout)");

    DoeArgs doe_args;
    CLI::App* doe = app.add_subcommand("doe", "full-factorial parameter study, CSV output");
    doe->add_option("--instance", doe_args.instance, "instance file")->required();
    doe->add_option("--n-pop-levels", doe_args.n_pop_levels, "population sizes, e.g. 5,10,15")
        ->required()
        ->delimiter(',');
    doe->add_option("--max-k-levels", doe_args.max_k_levels, "stall limits, e.g. 10,40,70")
        ->required()
        ->delimiter(',');
    doe->add_option("--replicates", doe_args.replicates, "runs per cell")->capture_default_str();
    doe->add_option("--seed", doe_args.seed, "base seed; replicate seeds derive from it")
        ->capture_default_str();
    doe->add_option("--max-iter", doe_args.max_iter, "hard iteration cap per run")
        ->capture_default_str();
    doe->add_flag("--no-local-search", doe_args.no_local_search,
                  "skip the descent after each GA run");
    CLI::Option* doe_zref =
        doe->add_option("--z-ref", doe_args.z_ref, "best known cost, for percent deviation");
    doe->add_option("--output", doe_args.output, "CSV file to write (default stdout)");

    try {
        app.parse(argc, argv);
        solve_args.has_z_ref = solve_zref->count() > 0;
        doe_args.has_z_ref = doe_zref->count() > 0;
        if (solve->parsed())
            cmd_solve(solve_args);
        if (exact->parsed())
            cmd_exact(exact_args);
        if (export_lp->parsed())
            cmd_export_lp(export_args);
        if (gen->parsed())
            cmd_gen(gen_args);
        if (doe->parsed())
            cmd_doe(doe_args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
