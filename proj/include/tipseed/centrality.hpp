#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "tipseed/tipping.hpp"

namespace tipseed {

enum class Measure { Degree, Betweenness, Closeness, Shell, Eigenvector, PageRank };

const char* measure_name(Measure m);
std::optional<Measure> measure_from_name(std::string_view name);

struct CentralityScores {
    Measure measure = Measure::Degree;
    std::vector<double> values;
};

// Out-degree.
CentralityScores degree_centrality(const DirectedGraph& g);

// Brandes' accumulation over ordered source/target pairs, unweighted.
CentralityScores betweenness(const DirectedGraph& g);

// reachable-count / sum-of-distances, over targets reachable from the node;
// nodes reaching nobody score 0.
CentralityScores closeness(const DirectedGraph& g);

// Core index from classic shell decomposition of the symmetrized graph.
CentralityScores shell_number(const DirectedGraph& g);

// Dominant-eigenvector scores of the adjacency operator via shifted power
// iteration (x <- x + Ax, normalized to unit max entry), which converges on
// bipartite graphs where the unshifted iteration oscillates. Requires at
// least one edge; throws ConvergenceError past max_iter.
CentralityScores eigenvector_centrality(const DirectedGraph& g, double tol = 1e-10,
                                        std::size_t max_iter = 10000);

// Uniform teleport, dangling mass redistributed uniformly; scores sum to 1.
CentralityScores pagerank(const DirectedGraph& g, double damping = 0.85, double tol = 1e-10,
                          std::size_t max_iter = 500);

// Adds nodes in descending score (ties to the smaller id) until the cascade
// from the prefix covers the graph; returns that first covering prefix.
SeedSet greedy_centrality_seed(const DirectedGraph& g, const ThresholdAssignment& ka,
                               const CentralityScores& scores);

// Upper bound sum_i min(1, k/(d_i + 1)) on the minimum seed size for
// symmetric graphs under a homogeneous integer threshold k >= 1. Asymmetric
// input throws ApplicabilityError.
double reichman_bound(const DirectedGraph& g, std::uint32_t k);

// CSV rows: node,measure,score — node is the original label when one exists
void write_scores_csv(const DirectedGraph& g, const CentralityScores& scores, std::ostream& out);

}  // namespace tipseed
