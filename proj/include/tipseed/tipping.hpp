#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "tipseed/graph.hpp"

namespace tipseed {

// Rule for deriving each node's activation requirement.
//
// FractionOfInDegree(f), f in (0,1]: node i needs ceil(f * d_in(i)) active
// in-neighbors. AbsoluteCapped(k), k >= 1: node i needs min(d_in(i), k).
// Either way a node with no in-edges requires 0 and activates on its own.
struct ThresholdSpec {
    enum class Kind { FractionOfInDegree, AbsoluteCapped };

    Kind kind = Kind::FractionOfInDegree;
    double fraction = 0.5;
    std::uint32_t count = 1;

    static ThresholdSpec fraction_of_in_degree(double f);
    static ThresholdSpec absolute_capped(std::uint32_t k);
};

// Realized per-node requirement; always 0 <= k[i] <= d_in(i).
struct ThresholdAssignment {
    std::vector<std::uint32_t> k;
};

// Sorted, duplicate-free node ids.
using SeedSet = std::vector<NodeId>;

// Time-stepped cascade record. steps[0] is the seed; steps[t] holds the
// nodes newly activated by the t-th application; cumulative[t] is the total
// active count after step t. Never longer than n + 1 entries.
struct ActivationTrace {
    std::vector<std::vector<NodeId>> steps;
    std::vector<std::size_t> cumulative;
};

ThresholdAssignment compute_thresholds(const DirectedGraph& g, const ThresholdSpec& spec);

// One synchronous application: active plus every node whose active
// in-neighbor count meets its requirement.
SeedSet activate_step(const DirectedGraph& g, const ThresholdAssignment& ka,
                      const SeedSet& active);

struct FixpointResult {
    SeedSet final_set;
    ActivationTrace trace;
};

// Applies activation until no node is added. O(n + m).
FixpointResult activate_fixpoint(const DirectedGraph& g, const ThresholdAssignment& ka,
                                 const SeedSet& seed);

// True iff the cascade from seed activates every node.
bool covers(const DirectedGraph& g, const ThresholdAssignment& ka, const SeedSet& seed);

struct CriticalMass {
    std::size_t step = 0;
    double percent = 0.0;  // largest single-step growth, relative to the prior total
};

// Earliest step with the greatest percentage increase in cumulative active
// count. A trace with no growth reports step 0 at 0%.
CriticalMass critical_mass_step(const ActivationTrace& trace);

// CSV rows: step,newly_active,cumulative
void write_trace_csv(const ActivationTrace& trace, std::ostream& out);

}  // namespace tipseed
