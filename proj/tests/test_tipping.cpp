#include <sstream>

#include "doctest.h"
#include "test_util.hpp"
#include "tipseed/generators.hpp"
#include "tipseed/tipping.hpp"

using namespace tipseed;

TEST_CASE("threshold realization") {
    SUBCASE("half of in-degree on a cycle") {
        DirectedGraph g = make_cycle(3);
        ThresholdAssignment ka = compute_thresholds(g, ThresholdSpec::fraction_of_in_degree(0.5));
        CHECK(ka.k == std::vector<std::uint32_t>{1, 1, 1});
    }
    SUBCASE("rounding up on the star center") {
        DirectedGraph g = make_star(4);  // leaves 0..3, center 4
        ThresholdAssignment ka = compute_thresholds(g, ThresholdSpec::fraction_of_in_degree(0.5));
        CHECK(ka.k[4] == 2);
        CHECK(ka.k[0] == 1);
    }
    SUBCASE("count caps at the in-degree") {
        DirectedGraph g = make_clique(4);  // d_in = 3
        ThresholdAssignment ka = compute_thresholds(g, ThresholdSpec::absolute_capped(10));
        CHECK(ka.k[0] == 3);
    }
    SUBCASE("no in-edges means no requirement") {
        DirectedGraph g = make_path(3);  // node 0 has d_in = 0
        ThresholdAssignment ka = compute_thresholds(g, ThresholdSpec::fraction_of_in_degree(0.9));
        CHECK(ka.k[0] == 0);
        CHECK(ka.k[1] == 1);
    }
    SUBCASE("fraction boundaries round exactly") {
        GraphBuilder b;
        b.reserve_nodes(21);
        for (NodeId u = 1; u <= 20; ++u) b.add_edge_ids(u, 0);
        DirectedGraph g = b.build();  // node 0 has d_in = 20
        CHECK(compute_thresholds(g, ThresholdSpec::fraction_of_in_degree(0.05)).k[0] == 1);
        CHECK(compute_thresholds(g, ThresholdSpec::fraction_of_in_degree(0.10)).k[0] == 2);
        CHECK(compute_thresholds(g, ThresholdSpec::fraction_of_in_degree(0.11)).k[0] == 3);
        CHECK(compute_thresholds(g, ThresholdSpec::fraction_of_in_degree(1.0)).k[0] == 20);
    }
    SUBCASE("spec validation") {
        CHECK_THROWS_AS(ThresholdSpec::fraction_of_in_degree(0.0), std::invalid_argument);
        CHECK_THROWS_AS(ThresholdSpec::fraction_of_in_degree(1.5), std::invalid_argument);
        CHECK_THROWS_AS(ThresholdSpec::absolute_capped(0), std::invalid_argument);
    }
}

TEST_CASE("single activation step") {
    DirectedGraph path = make_path(3);
    ThresholdAssignment ka = compute_thresholds(path, ThresholdSpec::fraction_of_in_degree(0.5));
    SUBCASE("one hop from the head") {
        CHECK(activate_step(path, ka, {0}) == SeedSet{0, 1});
    }
    SUBCASE("the full set is a fixpoint") {
        DirectedGraph g = make_uniform_random(12, 0.4, 3);
        ThresholdAssignment thr = compute_thresholds(g, ThresholdSpec::absolute_capped(2));
        SeedSet all;
        for (NodeId v = 0; v < g.node_count(); ++v) all.push_back(v);
        CHECK(activate_step(g, thr, all) == all);
    }
    SUBCASE("nothing meets a positive requirement from the empty set") {
        DirectedGraph cycle = make_cycle(3);
        ThresholdAssignment thr = compute_thresholds(cycle, ThresholdSpec::absolute_capped(1));
        CHECK(activate_step(cycle, thr, {}).empty());
    }
}

TEST_CASE("fixpoint cascades") {
    SUBCASE("self-starting path") {
        DirectedGraph path = make_path(3);
        ThresholdAssignment ka = compute_thresholds(path, ThresholdSpec::fraction_of_in_degree(0.5));
        FixpointResult fp = activate_fixpoint(path, ka, {});
        CHECK(fp.final_set == SeedSet{0, 1, 2});
        CHECK(fp.trace.steps.size() <= 4);  // seed entry plus at most three applications
    }
    SUBCASE("cycle from one node") {
        DirectedGraph cycle = make_cycle(3);
        ThresholdAssignment ka = compute_thresholds(cycle, ThresholdSpec::absolute_capped(1));
        FixpointResult fp = activate_fixpoint(cycle, ka, {1});
        CHECK(fp.final_set == SeedSet{0, 1, 2});
        REQUIRE(fp.trace.steps.size() == 3);
        CHECK(fp.trace.steps[0] == SeedSet{1});
        CHECK(fp.trace.steps[1] == SeedSet{2});
        CHECK(fp.trace.steps[2] == SeedSet{0});
    }
    SUBCASE("full seed converges immediately") {
        DirectedGraph g = make_clique(4);
        ThresholdAssignment ka = compute_thresholds(g, ThresholdSpec::absolute_capped(2));
        SeedSet all{0, 1, 2, 3};
        FixpointResult fp = activate_fixpoint(g, ka, all);
        CHECK(fp.final_set == all);
        CHECK(fp.trace.steps.size() == 1);
    }
}

TEST_CASE("coverage checks") {
    DirectedGraph cycle = make_cycle(3);
    ThresholdAssignment ka = compute_thresholds(cycle, ThresholdSpec::absolute_capped(1));
    CHECK(covers(cycle, ka, {1}));
    CHECK_FALSE(covers(cycle, ka, {}));

    DirectedGraph empty;
    ThresholdAssignment none;
    CHECK(covers(empty, none, {}));
}

TEST_CASE("critical mass detection") {
    ActivationTrace t;
    SUBCASE("largest relative jump wins") {
        t.cumulative = {1, 2, 10, 11};
        CriticalMass cm = critical_mass_step(t);
        CHECK(cm.step == 2);
        CHECK(cm.percent == doctest::Approx(400.0));
    }
    SUBCASE("stalled cascade reports no growth") {
        t.cumulative = {5, 5};
        CriticalMass cm = critical_mass_step(t);
        CHECK(cm.step == 0);
        CHECK(cm.percent == 0.0);
    }
    SUBCASE("ties break to the earliest step") {
        t.cumulative = {2, 4, 8};
        CriticalMass cm = critical_mass_step(t);
        CHECK(cm.step == 1);
        CHECK(cm.percent == doctest::Approx(100.0));
    }
    SUBCASE("single step means no cascade growth") {
        t.cumulative = {3};
        CriticalMass cm = critical_mass_step(t);
        CHECK(cm.step == 0);
        CHECK(cm.percent == 0.0);
    }
    SUBCASE("empty trace is an argument error") {
        CHECK_THROWS_AS(critical_mass_step(t), std::invalid_argument);
    }
}

TEST_CASE("cascade properties on random instances") {
    Rng rng(2024);
    for (int i = 0; i < 40; ++i) {
        DirectedGraph g = testutil::random_graph(rng, 40, i % 2 == 0);
        ThresholdSpec spec = i % 3 == 0
                                 ? ThresholdSpec::absolute_capped(1 + static_cast<std::uint32_t>(rng.next_below(4)))
                                 : ThresholdSpec::fraction_of_in_degree(0.05 + 0.9 * rng.next_unit());
        ThresholdAssignment ka = compute_thresholds(g, spec);
        CAPTURE(i);

        // random seeds S1 subset of S2
        SeedSet s1, s2;
        for (NodeId v = 0; v < g.node_count(); ++v) {
            double roll = rng.next_unit();
            if (roll < 0.2) s1.push_back(v);
            if (roll < 0.4) s2.push_back(v);
        }

        SeedSet stepped = activate_step(g, ka, s1);
        FixpointResult fp1 = activate_fixpoint(g, ka, s1);
        FixpointResult fp2 = activate_fixpoint(g, ka, s2);

        CHECK(std::includes(stepped.begin(), stepped.end(), s1.begin(), s1.end()));
        CHECK(std::includes(fp1.final_set.begin(), fp1.final_set.end(), stepped.begin(),
                            stepped.end()));
        CHECK(std::includes(fp2.final_set.begin(), fp2.final_set.end(), fp1.final_set.begin(),
                            fp1.final_set.end()));
        CHECK(fp1.trace.steps.size() <= g.node_count() + 1);

        // idempotence
        FixpointResult again = activate_fixpoint(g, ka, fp1.final_set);
        CHECK(again.final_set == fp1.final_set);

        // auto-activation of nodes with no in-edges
        FixpointResult from_nothing = activate_fixpoint(g, ka, {});
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (g.in_degree(v) == 0) {
                CHECK(std::binary_search(from_nothing.final_set.begin(),
                                         from_nothing.final_set.end(), v));
            }
        }
    }
}

TEST_CASE("trace serialization") {
    DirectedGraph cycle = make_cycle(3);
    ThresholdAssignment ka = compute_thresholds(cycle, ThresholdSpec::absolute_capped(1));
    FixpointResult fp = activate_fixpoint(cycle, ka, {1});
    std::ostringstream out;
    write_trace_csv(fp.trace, out);
    CHECK(out.str() == "step,newly_active,cumulative\n0,1,1\n1,1,2\n2,1,3\n");
}
