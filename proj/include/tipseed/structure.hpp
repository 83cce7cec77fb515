#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "tipseed/graph.hpp"

namespace tipseed {

// Fraction of a node's neighbor pairs that share an edge; 0 below degree 2.
// Symmetric graphs only (ApplicabilityError otherwise).
double local_clustering(const DirectedGraph& g, NodeId i);
double average_clustering(const DirectedGraph& g);

// Community id per node; ids are dense 0..q-1.
using Partition = std::vector<std::uint32_t>;

// Newman-Girvan modularity of a partition: intra-community edge density
// minus the degree-based null expectation, in [-1, 1]. Symmetric graphs
// with at least one undirected edge (domain_error on empty edge sets).
double modularity(const DirectedGraph& g, const Partition& partition);

struct LouvainResult {
    Partition partition;
    double modularity = 0.0;
};

// Greedy two-phase modularity maximization: local moving with a
// deterministic ascending-id sweep (only strictly improving moves), then
// community aggregation, repeated until a pass gains <= 1e-12. The returned
// modularity is recomputed from the flat partition.
LouvainResult louvain(const DirectedGraph& g);

struct StructurePoint {
    double modularity = 0.0;
    double clustering = 0.0;
    double seed_pct = 0.0;
};

struct PlanarFit {
    double coef_m = 0.0;
    double coef_c = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

// Ordinary least squares for seed_pct ~ a*modularity + b*clustering + c via
// normal equations. Needs >= 3 points (invalid_argument) and a full-rank
// design (DegenerateFitError). A constant response fits exactly with R² = 1.
PlanarFit planar_fit(const std::vector<StructurePoint>& points);

// CSV rows: node,community — node is the original label when one exists
void write_partition_csv(const DirectedGraph& g, const Partition& partition, std::ostream& out);

}  // namespace tipseed
