#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "gqap/exact.hpp"
#include "gqap/instance.hpp"
#include "test_helpers.hpp"

// GQAP_CLI_PATH is injected by the build; these tests drive the real binary.

namespace {

int run(const std::string& args, const std::string& stdout_path) {
    std::string cmd = std::string(GQAP_CLI_PATH) + " " + args + " > " + stdout_path + " 2>&1";
    int status = std::system(cmd.c_str());
    return status < 0 ? status : WEXITSTATUS(status);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

const std::string dir = "cli_scratch";

} // namespace

TEST_CASE("gen, exact and solve work end to end") {
    std::filesystem::create_directories(dir);
    const std::string inst_path = dir + "/m.gqap";
    const std::string log = dir + "/out.txt";

    REQUIRE(run("gen -m 5 -n 3 --seed 9 --output " + inst_path, log) == 0);
    gqap::GqapInstance inst = gqap::load_instance(inst_path);
    CHECK(inst.machine_count == 5);
    CHECK(inst.name == "rand-5x3-s9");

    gqap::ExactResult expect = gqap::brute_force_optimum(inst);
    REQUIRE(run("exact --instance " + inst_path, log) == 0);
    std::string report = read_file(log);
    CHECK(report.find("z_opt: " + gqap::format_number(expect.z_opt)) != std::string::npos);
    CHECK(report.find(gqap::format_assignment_cop(expect.optimum)) != std::string::npos);
    CHECK(report.find(gqap::format_assignment_xform(expect.optimum)) != std::string::npos);

    REQUIRE(run("solve --instance " + inst_path + " --seed 3 --z-ref " +
                    gqap::format_number(expect.z_opt),
                log) == 0);
    std::string solved = read_file(log);
    CHECK(solved.find("z_best (after local search):") != std::string::npos);
    CHECK(solved.find("percent deviation:") != std::string::npos);
}

TEST_CASE("export-lp prints the statistics triple and writes the model") {
    std::filesystem::create_directories(dir);
    const std::string inst_path = dir + "/l.gqap";
    const std::string lp_path = dir + "/l.lp";
    const std::string log = dir + "/lp_out.txt";

    REQUIRE(run("gen -m 6 -n 4 --seed 2 --output " + inst_path, log) == 0);
    REQUIRE(run("export-lp --instance " + inst_path + " --counting-mode --output " + lp_path,
                log) == 0);
    CHECK(read_file(log) == "constraints=370 variables=384 binaries=24\n");
    testutil::LpModel model = testutil::parse_lp(read_file(lp_path));
    CHECK(model.rows.size() == 370);
    CHECK(model.binaries.size() == 24);
}

TEST_CASE("doe emits the CSV grid") {
    std::filesystem::create_directories(dir);
    const std::string inst_path = dir + "/d.gqap";
    const std::string csv_path = dir + "/d.csv";
    const std::string log = dir + "/doe_out.txt";

    REQUIRE(run("gen -m 4 -n 3 --seed 6 --output " + inst_path, log) == 0);
    REQUIRE(run("doe --instance " + inst_path +
                    " --n-pop-levels 5,10 --max-k-levels 10,20 --replicates 2 --seed 3 --output " +
                    csv_path,
                log) == 0);
    auto lines = testutil::split_lines(read_file(csv_path));
    REQUIRE(lines.size() == 1 + 8 + 4);
    CHECK(lines[0].rfind("instance,", 0) == 0);
    CHECK(testutil::split_csv_line(lines[9])[3] == "best");
}

TEST_CASE("errors exit nonzero with a message") {
    std::filesystem::create_directories(dir);
    const std::string log = dir + "/err.txt";
    CHECK(run("solve --instance " + dir + "/missing.gqap", log) == 1);
    CHECK(read_file(log).find("error:") != std::string::npos);
    CHECK(run("solve", log) != 0);             // missing required flag
    CHECK(run("frobnicate", log) != 0);        // unknown subcommand
    CHECK(run("exact --instance " + dir + "/missing.gqap --limit 10", log) == 1);
}
