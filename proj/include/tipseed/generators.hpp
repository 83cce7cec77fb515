#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "tipseed/graph.hpp"

namespace tipseed {

// Deterministic RNG wrapper. mt19937_64 has a standard-specified sequence,
// and the value extraction below avoids the implementation-defined std
// distributions, so identical seeds give identical graphs everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, 1).
    double next_unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound); bound > 0.
    std::uint64_t next_below(std::uint64_t bound);

private:
    std::mt19937_64 eng_;
};

// Fixed-shape constructors. `symmetric` doubles every edge.
DirectedGraph make_cycle(std::size_t n, bool symmetric = false);        // 0->1->...->0
DirectedGraph make_path(std::size_t n, bool symmetric = false);        // 0->1->...->n-1
DirectedGraph make_star(std::size_t leaves, bool symmetric = true);    // leaves first, center last
DirectedGraph make_clique(std::size_t n);                              // complete, symmetric

// G(n, p): every node pair carries an edge independently with probability p.
// Runs in O(n + m) via geometric skipping. Isolated nodes are kept.
DirectedGraph make_uniform_random(std::size_t n, double p, std::uint64_t seed,
                                  bool symmetric = true);

// Preferential attachment: nodes arrive one at a time and attach
// edges_per_node undirected edges to distinct existing nodes chosen
// proportionally to degree. Requires n > edges_per_node >= 1.
DirectedGraph make_preferential_attachment(std::size_t n, std::size_t edges_per_node,
                                           std::uint64_t seed);

struct SyntheticParams {
    std::string kind;  // cycle | star | path | clique | uniform-random | preferential-attachment
    std::size_t n = 0;
    double p = 0.0;            // uniform-random
    std::size_t edges_per_node = 2;  // preferential-attachment
    std::uint64_t seed = 0;
    bool directed = false;     // symmetric unless requested
};

// Dispatch by kind name; unknown kind or invalid params throw invalid_argument.
DirectedGraph make_synthetic(const SyntheticParams& params);

}  // namespace tipseed
