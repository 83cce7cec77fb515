#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "tipseed/tipping.hpp"

namespace tipseed {

// Minimum covering seed by subset enumeration in increasing cardinality;
// among minimum-size solutions returns the lexicographically smallest id
// set. Refuses instances larger than node_limit (SizeLimitError).
SeedSet min_seed_bruteforce(const DirectedGraph& g, const ThresholdAssignment& ka,
                            std::size_t node_limit = 20);

// 0/1 program over x[i][t], i,t in 1..n: minimize the number of initially
// active nodes subject to every node being active at t = n and activation
// only when enough in-neighbors were active at t-1. Exactly n^2 variables
// and 2n^2 constraints (n^2 binary domains, n end rows, n(n-1) activation
// rows; nodes with no in-edges get an unconstrained "free" activation row).
struct IpModel {
    struct ActivationRow {
        NodeId node = 0;          // 0-based
        std::uint32_t t = 0;      // 1-based step, 2..n
        double coefficient = 0.0; // 1 / (d_in * theta); 0 for free rows
        std::vector<NodeId> in_neighbors;
        bool free_activation = false;  // d_in == 0: row reduces to x_i_t <= 1
    };

    std::size_t n = 0;
    std::vector<double> theta;  // effective per-node threshold fraction, 0 where d_in = 0
    std::vector<NodeId> end_rows;            // x[i][n] = 1
    std::vector<ActivationRow> activation_rows;

    std::size_t variable_count() const { return n * n; }
    std::size_t constraint_count() const {
        return n * n + end_rows.size() + activation_rows.size();
    }
};

// For FractionOfInDegree, theta is the fraction itself; for AbsoluteCapped,
// theta(i) = k(i)/d_in(i) on nodes with in-edges.
IpModel build_seed_ip(const DirectedGraph& g, const ThresholdSpec& spec);

// LP-format text: Minimize / Subject To / Binary / End. Variables are named
// x_<i>_<t> (1-based). Activation rows are rearranged to
//   x_i_t - x_i_(t-1) - c x_j_(t-1) - ... <= 0
// with c printed as an integer when exact, else with 12 significant digits.
// Output is byte-deterministic for a given model.
void export_lp(const IpModel& model, std::ostream& out);

// Optimizes over initial assignments x[.][1], propagating each candidate
// through the program's activation dynamics (maximal trajectory) and
// accepting those with every x[i][n] = 1. Returns a minimum-cost accepted
// seed, lexicographically smallest on ties. Cardinality always matches
// min_seed_bruteforce.
SeedSet solve_seed_ip_small(const DirectedGraph& g, const ThresholdSpec& spec,
                            std::size_t node_limit = 12);

}  // namespace tipseed
