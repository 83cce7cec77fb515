#include <sstream>

#include "doctest.h"
#include "test_util.hpp"
#include "tipseed/errors.hpp"
#include "tipseed/exact.hpp"
#include "tipseed/generators.hpp"

using namespace tipseed;

TEST_CASE("exhaustive minimum seeds") {
    SUBCASE("one node tips a cycle") {
        DirectedGraph g = make_cycle(3);
        ThresholdAssignment ka = compute_thresholds(g, ThresholdSpec::absolute_capped(1));
        CHECK(min_seed_bruteforce(g, ka) == SeedSet{0});
    }
    SUBCASE("one node suffices on the star") {
        DirectedGraph g = make_star(4);  // leaves 0..3, center 4
        ThresholdAssignment ka = compute_thresholds(g, ThresholdSpec::fraction_of_in_degree(0.25));
        SeedSet best = min_seed_bruteforce(g, ka);
        CHECK(best.size() == 1);
        CHECK(covers(g, ka, best));
        CHECK(best == SeedSet{0});  // lexicographically smallest of the minimum seeds
    }
    SUBCASE("self-starting graphs need nothing") {
        DirectedGraph g = make_uniform_random(5, 0.0, 1);  // no edges at all
        ThresholdAssignment ka = compute_thresholds(g, ThresholdSpec::absolute_capped(2));
        CHECK(min_seed_bruteforce(g, ka).empty());
    }
    SUBCASE("oversized instances are refused by name") {
        DirectedGraph g = make_uniform_random(21, 0.1, 3);
        ThresholdAssignment ka = compute_thresholds(g, ThresholdSpec::absolute_capped(1));
        CHECK_THROWS_AS(min_seed_bruteforce(g, ka, 20), SizeLimitError);
        try {
            min_seed_bruteforce(g, ka, 20);
        } catch (const SizeLimitError& e) {
            CHECK(std::string(e.what()).find("20") != std::string::npos);
        }
    }
}

TEST_CASE("program construction") {
    SUBCASE("quadratic variable and constraint counts") {
        DirectedGraph g = make_uniform_random(4, 0.5, 9);
        IpModel model = build_seed_ip(g, ThresholdSpec::fraction_of_in_degree(0.5));
        CHECK(model.variable_count() == 16);
        CHECK(model.constraint_count() == 32);
        CHECK(model.end_rows.size() == 4);
        CHECK(model.activation_rows.size() == 12);
    }
    SUBCASE("single node") {
        DirectedGraph g = make_path(1);
        IpModel model = build_seed_ip(g, ThresholdSpec::fraction_of_in_degree(0.5));
        CHECK(model.variable_count() == 1);
        CHECK(model.constraint_count() == 2);
        CHECK(model.activation_rows.empty());
    }
    SUBCASE("empty graph gives an empty model") {
        DirectedGraph g;
        IpModel model = build_seed_ip(g, ThresholdSpec::fraction_of_in_degree(0.5));
        CHECK(model.variable_count() == 0);
        CHECK(model.constraint_count() == 0);
    }
    SUBCASE("cycle coefficients substitute directly") {
        DirectedGraph g = make_cycle(3);
        IpModel model = build_seed_ip(g, ThresholdSpec::fraction_of_in_degree(0.5));
        REQUIRE_FALSE(model.activation_rows.empty());
        for (const auto& row : model.activation_rows) {
            CHECK(row.coefficient == doctest::Approx(2.0));
            CHECK(row.in_neighbors.size() == 1);
        }
    }
    SUBCASE("nodes without in-edges get free rows") {
        DirectedGraph g = make_path(3);
        IpModel model = build_seed_ip(g, ThresholdSpec::fraction_of_in_degree(0.5));
        std::size_t free_rows = 0;
        for (const auto& row : model.activation_rows) {
            if (row.free_activation) {
                CHECK(row.node == 0);
                ++free_rows;
            }
        }
        CHECK(free_rows == 2);  // t = 2, 3
        CHECK(model.constraint_count() == 18);
    }
    SUBCASE("capped counts become effective fractions") {
        DirectedGraph g = make_clique(4);  // d_in = 3
        IpModel model = build_seed_ip(g, ThresholdSpec::absolute_capped(2));
        CHECK(model.theta[0] == doctest::Approx(2.0 / 3.0));
        CHECK(model.activation_rows.front().coefficient == doctest::Approx(0.5));
    }
}

TEST_CASE("LP text export") {
    SUBCASE("single-node program") {
        DirectedGraph g = make_path(1);
        IpModel model = build_seed_ip(g, ThresholdSpec::fraction_of_in_degree(0.5));
        std::ostringstream out;
        export_lp(model, out);
        CHECK(out.str() ==
              "Minimize\n"
              " obj: x_1_1\n"
              "Subject To\n"
              " end_1: x_1_1 = 1\n"
              "Binary\n"
              " x_1_1\n"
              "End\n");
    }
    SUBCASE("cycle activation rows clear their coefficients") {
        DirectedGraph g = make_cycle(3);
        IpModel model = build_seed_ip(g, ThresholdSpec::fraction_of_in_degree(0.5));
        std::ostringstream out;
        export_lp(model, out);
        CHECK(out.str().find("act_1_2: x_1_2 - x_1_1 - 2 x_3_1 <= 0") != std::string::npos);
        CHECK(out.str().find("end_2: x_2_3 = 1") != std::string::npos);
    }
    SUBCASE("fractional coefficients print with 12 significant digits") {
        DirectedGraph g = make_clique(4);
        IpModel model = build_seed_ip(g, ThresholdSpec::fraction_of_in_degree(0.5));
        std::ostringstream out;
        export_lp(model, out);
        // 1 / (3 * 0.5)
        CHECK(out.str().find("0.666666666667 x_") != std::string::npos);
    }
    SUBCASE("export is byte deterministic") {
        DirectedGraph g = make_uniform_random(6, 0.4, 8);
        IpModel model = build_seed_ip(g, ThresholdSpec::fraction_of_in_degree(0.35));
        std::ostringstream first, second;
        export_lp(model, first);
        export_lp(model, second);
        CHECK(first.str() == second.str());
        CHECK_FALSE(first.str().empty());
    }
}

TEST_CASE("trajectory enumeration solver") {
    SUBCASE("cycle optimum") {
        DirectedGraph g = make_cycle(3);
        CHECK(solve_seed_ip_small(g, ThresholdSpec::absolute_capped(1)).size() == 1);
    }
    SUBCASE("unanimous clique needs all but one") {
        DirectedGraph g = make_clique(4);
        CHECK(solve_seed_ip_small(g, ThresholdSpec::fraction_of_in_degree(1.0)).size() == 3);
    }
    SUBCASE("single node must seed itself") {
        DirectedGraph g = make_path(1);
        CHECK(solve_seed_ip_small(g, ThresholdSpec::fraction_of_in_degree(0.5)) == SeedSet{0});
    }
    SUBCASE("size limit applies") {
        DirectedGraph g = make_uniform_random(13, 0.2, 4);
        CHECK_THROWS_AS(solve_seed_ip_small(g, ThresholdSpec::absolute_capped(1), 12),
                        SizeLimitError);
    }
}

// The comparison needs every node to have an in-edge: an auto-activating
// node can let the empty seed cover, which the program's fixed horizon
// cannot express (its end constraint already forces objective 1 at n = 1).
TEST_CASE("the two exact routes agree") {
    Rng rng(400);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 2 + rng.next_below(9);
        bool symmetric = trial % 2 == 0;
        DirectedGraph g = testutil::with_spanning_cycle(
            make_uniform_random(n, 0.1 + 0.7 * rng.next_unit(), rng.next_u64(), symmetric),
            symmetric);
        ThresholdSpec spec =
            trial % 2 == 0
                ? ThresholdSpec::absolute_capped(1 + static_cast<std::uint32_t>(rng.next_below(3)))
                : ThresholdSpec::fraction_of_in_degree(0.05 * (1 + rng.next_below(12)));
        CAPTURE(trial);
        ThresholdAssignment ka = compute_thresholds(g, spec);
        SeedSet direct = min_seed_bruteforce(g, ka);
        SeedSet via_program = solve_seed_ip_small(g, spec);
        CHECK(direct.size() == via_program.size());
    }
}

TEST_CASE("raising a homogeneous threshold never shrinks the optimum") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        DirectedGraph g = make_uniform_random(2 + rng.next_below(8), 0.1 + 0.6 * rng.next_unit(),
                                              rng.next_u64(), true);
        CAPTURE(trial);
        std::size_t previous = 0;
        for (std::uint32_t k = 1; k <= 5; ++k) {
            ThresholdAssignment ka = compute_thresholds(g, ThresholdSpec::absolute_capped(k));
            std::size_t best = min_seed_bruteforce(g, ka).size();
            CHECK(best >= previous);
            previous = best;
        }
    }
}
