#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gqap/common.hpp"

namespace gqap {

// Dense row-major matrix of doubles. 0-based accessors.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(int r, int c, double v = 0.0)
        : rows(r), cols(c), data(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), v) {}

    double& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    double operator()(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

// One GQAP problem: assign M machines to N capacitated locations.
// Machine and location indices are 1-based everywhere the suite talks to
// the outside world (files, reports, assignments); matrix accessors are
// 0-based.
struct GqapInstance {
    int machine_count = 0;                // M
    int location_count = 0;               // N
    Matrix flow;                          // M x M, f_ij
    Matrix distance;                      // N x N, d_kl
    Matrix assign_cost;                   // M x N, a_ik
    std::vector<double> requirement;      // length M, r_i
    std::vector<double> capacity;         // length N, c_k
    double unit_cost = 1.0;               // uniform transport cost per flow*distance unit
    std::string name;

    friend bool operator==(const GqapInstance&, const GqapInstance&) = default;
};

// Throws GqapError unless all dimensions agree, every entry is finite and
// nonnegative, and M, N >= 1.
void validate_instance(const GqapInstance& inst);

// Text format, one instance per stream:
//   - '#' starts a comment running to end of line; blank lines are skipped.
//   - first data line: "M N"
//   - five labeled blocks in fixed order, each label alone on its line:
//       A (M x N), F (M x M), D (N x N), R (M values), C (N values)
//   - optional trailing block UNIT_COST with a single scalar (default 1)
// The serializer writes "# name: <label>" as the first line when the
// instance has a name, and the parser recognizes exactly that comment.
GqapInstance parse_instance(std::istream& in);
GqapInstance parse_instance(const std::string& text);
GqapInstance load_instance(const std::string& path);

std::string serialize_instance(const GqapInstance& inst);
void save_instance(const GqapInstance& inst, const std::string& path);

// Bounds for random instance generation. All draws are uniform integers.
struct GenRanges {
    int flow_min = 0;
    int flow_max = 50;
    int distance_min = 1;
    int distance_max = 50;
    int assign_cost_min = 0;
    int assign_cost_max = 100;
    int requirement_min = 1;
    int requirement_max = 10;
    int slack_min = 0;   // spare capacity above the seeded load
    int slack_max = 10;
};

// Random instance that is feasible by construction: a hidden assignment is
// drawn first and every location's capacity covers the load it induces,
// plus slack. Flow and distance diagonals are zero. Pure function of
// (M, N, seed, ranges); the draw order is requirement, seed assignment,
// capacity slack, flow, distance, assign_cost, row-major within each block.
GqapInstance generate_random_instance(int machines, int locations, std::uint64_t seed,
                                      const GenRanges& ranges = {});

} // namespace gqap
