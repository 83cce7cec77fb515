#include <cmath>
#include <sstream>

#include "doctest.h"
#include "test_util.hpp"
#include "tipseed/centrality.hpp"
#include "tipseed/errors.hpp"
#include "tipseed/generators.hpp"

using namespace tipseed;

TEST_CASE("degree scores") {
    DirectedGraph star = make_star(4);  // leaves 0..3, center 4
    CentralityScores s = degree_centrality(star);
    CHECK(s.values[4] == 4.0);
    CHECK(s.values[0] == 1.0);

    DirectedGraph cycle = make_cycle(3);
    for (double v : degree_centrality(cycle).values) CHECK(v == 1.0);

    DirectedGraph empty;
    CHECK(degree_centrality(empty).values.empty());
}

TEST_CASE("betweenness") {
    SUBCASE("path middle carries both ordered pairs") {
        DirectedGraph path = make_path(3, true);
        CentralityScores s = betweenness(path);
        CHECK(s.values[0] == 0.0);
        CHECK(s.values[1] == doctest::Approx(2.0));
        CHECK(s.values[2] == 0.0);
    }
    SUBCASE("complete graphs need no intermediaries") {
        for (double v : betweenness(make_clique(3)).values) CHECK(v == 0.0);
    }
    SUBCASE("disconnected pairs contribute nothing") {
        DirectedGraph g = testutil::graph_from_edges(4, {{0, 1}, {2, 3}}, true);
        for (double v : betweenness(g).values) CHECK(v == 0.0);
    }
    SUBCASE("matches path enumeration on random graphs") {
        Rng rng(640);
        for (int trial = 0; trial < 100; ++trial) {
            DirectedGraph g = make_uniform_random(2 + rng.next_below(7),
                                                  0.1 + 0.7 * rng.next_unit(), rng.next_u64(),
                                                  trial % 2 == 0);
            CAPTURE(trial);
            CentralityScores fast = betweenness(g);
            std::vector<double> slow = testutil::betweenness_bruteforce(g);
            for (NodeId v = 0; v < g.node_count(); ++v) {
                CHECK(fast.values[v] == doctest::Approx(slow[v]).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("closeness") {
    DirectedGraph star = make_star(4);  // leaves 0..3, center 4
    CentralityScores s = closeness(star);
    CHECK(s.values[4] == doctest::Approx(1.0));
    CHECK(s.values[0] == doctest::Approx(4.0 / 7.0));

    DirectedGraph with_isolate = testutil::graph_from_edges(3, {{0, 1}}, true);
    CHECK(closeness(with_isolate).values[2] == 0.0);
}

TEST_CASE("shell numbers") {
    SUBCASE("triangle with a pendant") {
        DirectedGraph g = testutil::graph_from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}, true);
        CentralityScores s = shell_number(g);
        CHECK(s.values[0] == 2.0);
        CHECK(s.values[1] == 2.0);
        CHECK(s.values[2] == 2.0);
        CHECK(s.values[3] == 1.0);
    }
    SUBCASE("a directed cycle symmetrizes to core two") {
        for (double v : shell_number(make_cycle(3)).values) CHECK(v == 2.0);
    }
    SUBCASE("edgeless nodes sit in shell zero") {
        DirectedGraph g = make_uniform_random(5, 0.0, 1);
        for (double v : shell_number(g).values) CHECK(v == 0.0);
    }
    SUBCASE("matches the stripping definition on random graphs") {
        Rng rng(8100);
        for (int trial = 0; trial < 40; ++trial) {
            DirectedGraph g = testutil::random_graph(rng, 30, trial % 2 == 0);
            CAPTURE(trial);
            CentralityScores fast = shell_number(g);
            std::vector<std::size_t> slow = testutil::core_numbers_bruteforce(g);
            for (NodeId v = 0; v < g.node_count(); ++v) {
                CHECK(fast.values[v] == static_cast<double>(slow[v]));
            }
        }
    }
}

TEST_CASE("eigenvector scores") {
    SUBCASE("regular graphs score uniformly") {
        CentralityScores cy = eigenvector_centrality(make_cycle(3, true));
        CHECK(cy.values[0] == doctest::Approx(cy.values[1]));
        CHECK(cy.values[1] == doctest::Approx(cy.values[2]));
        CentralityScores k4 = eigenvector_centrality(make_clique(4));
        for (double v : k4.values) CHECK(v == doctest::Approx(k4.values[0]));
    }
    SUBCASE("the star center dominates") {
        CentralityScores s = eigenvector_centrality(make_star(4));
        CHECK(s.values[4] == doctest::Approx(1.0));
        for (NodeId leaf = 0; leaf < 4; ++leaf) CHECK(s.values[leaf] < s.values[4]);
    }
    SUBCASE("needs an edge") {
        CHECK_THROWS_AS(eigenvector_centrality(make_uniform_random(4, 0.0, 1)),
                        std::invalid_argument);
    }
    SUBCASE("reports non-convergence") {
        CHECK_THROWS_AS(eigenvector_centrality(make_star(4), 1e-10, 1), ConvergenceError);
    }
}

TEST_CASE("pagerank") {
    SUBCASE("cycle symmetry") {
        CentralityScores s = pagerank(make_cycle(3));
        for (double v : s.values) CHECK(v == doctest::Approx(1.0 / 3.0));
    }
    SUBCASE("teleport only, two isolated nodes") {
        CentralityScores s = pagerank(make_uniform_random(2, 0.0, 1));
        CHECK(s.values[0] == doctest::Approx(0.5));
        CHECK(s.values[1] == doctest::Approx(0.5));
    }
    SUBCASE("the star center outranks its leaves") {
        CentralityScores s = pagerank(make_star(4));
        for (NodeId leaf = 0; leaf < 4; ++leaf) CHECK(s.values[4] > s.values[leaf]);
    }
    SUBCASE("mass is conserved on random graphs") {
        Rng rng(55);
        for (int trial = 0; trial < 20; ++trial) {
            DirectedGraph g = testutil::random_graph(rng, 40, trial % 2 == 0);
            CAPTURE(trial);
            CentralityScores s = pagerank(g);
            double total = 0.0;
            for (double v : s.values) total += v;
            if (g.node_count() > 0) CHECK(std::abs(total - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("greedy centrality seeding") {
    SUBCASE("the star center covers alone") {
        DirectedGraph g = make_star(4);  // leaves 0..3, center 4
        ThresholdAssignment ka = compute_thresholds(g, ThresholdSpec::absolute_capped(1));
        CHECK(greedy_centrality_seed(g, ka, degree_centrality(g)) == SeedSet{4});
    }
    SUBCASE("any single node tips a cycle") {
        DirectedGraph g = make_cycle(3);
        ThresholdAssignment ka = compute_thresholds(g, ThresholdSpec::absolute_capped(1));
        CHECK(greedy_centrality_seed(g, ka, pagerank(g)).size() == 1);
    }
    SUBCASE("unanimous triangle needs two") {
        DirectedGraph g = make_clique(3);
        ThresholdAssignment ka = compute_thresholds(g, ThresholdSpec::absolute_capped(2));
        CHECK(greedy_centrality_seed(g, ka, degree_centrality(g)).size() == 2);
    }
    SUBCASE("mismatched scores are an argument error") {
        DirectedGraph g = make_cycle(3);
        ThresholdAssignment ka = compute_thresholds(g, ThresholdSpec::absolute_capped(1));
        CentralityScores wrong{Measure::Degree, {1.0}};
        CHECK_THROWS_AS(greedy_centrality_seed(g, ka, wrong), std::invalid_argument);
    }
    SUBCASE("always terminates with a covering set") {
        Rng rng(911);
        for (int trial = 0; trial < 25; ++trial) {
            DirectedGraph g = testutil::random_graph(rng, 25, trial % 2 == 0);
            ThresholdAssignment ka = compute_thresholds(
                g, ThresholdSpec::absolute_capped(1 + static_cast<std::uint32_t>(rng.next_below(4))));
            CAPTURE(trial);
            SeedSet seed = greedy_centrality_seed(g, ka, degree_centrality(g));
            CHECK(covers(g, ka, seed));
        }
    }
}

TEST_CASE("seed-size upper bound") {
    SUBCASE("unanimous pairs on a clique") {
        CHECK(reichman_bound(make_clique(4), 2) == doctest::Approx(2.0));
    }
    SUBCASE("triangle at threshold one") {
        CHECK(reichman_bound(make_cycle(3, true), 1) == doctest::Approx(1.0));
    }
    SUBCASE("saturates at the node count") {
        DirectedGraph g = make_cycle(4, true);  // degree 2 everywhere
        CHECK(reichman_bound(g, 3) == doctest::Approx(4.0));
    }
    SUBCASE("star mixes saturated and fractional terms") {
        CHECK(reichman_bound(make_star(4), 1) == doctest::Approx(2.2));
    }
    SUBCASE("asymmetric input is out of scope") {
        CHECK_THROWS_AS(reichman_bound(make_cycle(3), 1), ApplicabilityError);
    }
}

TEST_CASE("score serialization") {
    std::ostringstream out;
    DirectedGraph cycle = make_cycle(3);
    write_scores_csv(cycle, degree_centrality(cycle), out);
    CHECK(out.str() == "node,measure,score\n0,degree,1\n1,degree,1\n2,degree,1\n");

    std::istringstream text("x y\ny z\nz x\n");
    DirectedGraph labeled = load_edge_list(text, false);
    std::ostringstream named;
    write_scores_csv(labeled, degree_centrality(labeled), named);
    CHECK(named.str() == "node,measure,score\nx,degree,1\ny,degree,1\nz,degree,1\n");
}
