#include "doctest.h"

#include <algorithm>

#include "gqap/local_search.hpp"
#include "test_helpers.hpp"

using namespace gqap;

TEST_CASE("neighborhood of a 2x2 assignment") {
    GqapInstance inst = testutil::tiny2x2();
    Neighborhood moves = neighbors(inst, {1, 2});
    REQUIRE(moves.size() == 3);
    CHECK(moves[0] == Assignment{2, 2}); // machine 1 -> location 2
    CHECK(moves[1] == Assignment{1, 1}); // machine 2 -> location 1
    CHECK(moves[2] == Assignment{2, 1}); // swap
}

TEST_CASE("single-location instances have no neighbors") {
    GqapInstance inst = testutil::make_instance(3, 1, {1, 2, 3}, std::vector<double>(9, 0.0),
                                                {0}, {1, 1, 1}, {3});
    CHECK(neighbors(inst, {1, 1, 1}).empty());
}

TEST_CASE("neighborhood size and contents obey the counting bound") {
    Rng rng(15);
    for (int t = 0; t < 50; ++t) {
        int m = rng.uniform_int(2, 7);
        int n = rng.uniform_int(2, 5);
        GqapInstance inst = generate_random_instance(m, n, rng.next_u64());
        Assignment s(m);
        for (int& slot : s)
            slot = rng.uniform_int(1, n);
        Neighborhood moves = neighbors(inst, s);
        CHECK(moves.size() <=
              static_cast<std::size_t>(m) * (n - 1) + static_cast<std::size_t>(m) * (m - 1) / 2);
        for (const Assignment& cand : moves) {
            CHECK(cand != s);
            CHECK_NOTHROW(validate_assignment(inst, cand));
        }
        // co-located pairs produce no swap; everything else shows up once
        long swaps = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (s[i] != s[j])
                    ++swaps;
        CHECK(moves.size() == static_cast<std::size_t>(m) * (n - 1) + swaps);
    }
}

TEST_CASE("descent returns a feasible local optimum, never worse than the start") {
    Rng rng(16);
    for (int t = 0; t < 30; ++t) {
        int m = rng.uniform_int(3, 6);
        int n = rng.uniform_int(2, 4);
        GqapInstance inst = generate_random_instance(m, n, rng.next_u64());
        Assignment start = testutil::random_feasible_assignment(inst, rng);
        auto [result, cost] = steepest_descent(inst, start);

        CHECK(cost == total_cost(inst, result));
        CHECK(cost <= total_cost(inst, start));
        CHECK(unfitness_of(inst, result) == 0);
        for (const Assignment& cand : neighbors(inst, result)) {
            if (unfitness_of(inst, cand) > 0)
                continue;
            CHECK(total_cost(inst, cand) >= cost);
        }

        // idempotence
        auto [again, cost2] = steepest_descent(inst, result);
        CHECK(again == result);
        CHECK(cost2 == cost);
    }
}

TEST_CASE("descent walks the tiny instance to its optimum") {
    GqapInstance inst = testutil::tiny2x2();
    // costs: (1,1)=4, (1,2)=30, (2,1)=30, (2,2)=6; R=(1,1), C=(2,2) keep all feasible
    auto [best, cost] = steepest_descent(inst, {1, 2});
    CHECK(best == Assignment{1, 1});
    CHECK(cost == 4);
    auto [stay, c2] = steepest_descent(inst, {1, 1});
    CHECK(stay == Assignment{1, 1});
    CHECK(c2 == 4);
}

TEST_CASE("infeasible inputs come back unchanged") {
    GqapInstance inst = testutil::make_instance(2, 2, {1, 2, 3, 4}, std::vector<double>(4, 0.0),
                                                std::vector<double>(4, 0.0), {3, 3}, {4, 10});
    auto [result, cost] = steepest_descent(inst, {1, 1});
    CHECK(result == Assignment{1, 1});
    CHECK(cost == total_cost(inst, {1, 1}));
    CHECK(unfitness_of(inst, result) > 0);
}

TEST_CASE("descent matches the brute-force optimum when the landscape is convex enough") {
    // with no flow, cost is separable per machine, so descent must reach the
    // global optimum from anywhere feasible permitting the moves
    GqapInstance inst = testutil::make_instance(
        3, 3, {9, 1, 5, 4, 8, 2, 7, 3, 6}, std::vector<double>(9, 0.0),
        std::vector<double>(9, 0.0), {1, 1, 1}, {3, 3, 3});
    auto [best, cost] = steepest_descent(inst, {1, 1, 1});
    CHECK(cost == 1 + 2 + 3);
    CHECK(best == Assignment{2, 3, 2});
}
