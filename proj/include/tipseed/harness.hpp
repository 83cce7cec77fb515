#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tipseed/centrality.hpp"
#include "tipseed/decomp.hpp"
#include "tipseed/generators.hpp"
#include "tipseed/tipping.hpp"

namespace tipseed {

enum class ThresholdMode { IntegerSweep, FractionSweep, SingleInt, SingleFraction };

struct TrialConfig {
    std::string network_name = "graph";
    ThresholdMode mode = ThresholdMode::SingleFraction;
    std::uint32_t int_value = 2;
    double frac_value = 0.5;
    // "decomp", "bruteforce", "ip-export", "greedy-<measure>"
    std::vector<std::string> algorithms = {"decomp"};
    std::vector<double> removal_fractions;  // each in [0, 0.5]
    std::vector<std::string> measures;      // baselines; empty = all six
    std::uint64_t rng_seed = 0;
    std::size_t bruteforce_limit = 20;
    std::string out_stem;  // prefix for side files such as exported models
};

// One experiment outcome. A failed trial keeps its identifying columns and
// carries the diagnostic in `error` (JSON output only; the CSV column set
// is fixed).
struct TrialRecord {
    std::string network;
    std::size_t n = 0;
    std::size_t m = 0;
    std::string mode;       // "int" | "frac"
    double value = 0.0;     // k or f
    std::string algorithm;
    double seed_size = 0.0;  // real: the bound row is fractional
    double seed_fraction = 0.0;
    double runtime_ms = 0.0;
    std::size_t steps = 0;
    std::size_t critical_step = 0;
    double critical_pct = 0.0;
    std::optional<double> removal_fraction;
    bool failed = false;
    std::string error;
};

// (mode, value) pairs a config expands to: k = 1..10 for the integer sweep,
// multiples of 0.05 in [0.05, 0.60] for the fractional sweep.
std::vector<std::pair<std::string, double>> threshold_settings(const TrialConfig& cfg);

ThresholdSpec spec_for(const std::string& mode, double value);

// Runs the configured algorithms at every threshold setting. Decomp records
// re-verify coverage before emission; per-trial failures are recorded and
// the sweep continues. Records come back sorted by (mode, value, algorithm).
std::vector<TrialRecord> run_threshold_sweep(const DirectedGraph& g, const TrialConfig& cfg);

// For each fraction p, removes the floor(p*n) highest-total-degree nodes
// (ties to the smaller id), recomputes thresholds on the survivors, and
// records the decomposition seed as a fraction of the surviving population.
std::vector<TrialRecord> run_degree_removal(const DirectedGraph& g, const TrialConfig& cfg);

struct SpeedResult {
    std::vector<TrialRecord> records;
    // one trace per threshold setting, keyed "mode=value"
    std::vector<std::pair<std::string, ActivationTrace>> traces;
};

// Simulates the cascade from the decomposition seed and keeps the per-step
// traces alongside critical-mass summaries.
SpeedResult run_activation_speed(const DirectedGraph& g, const TrialConfig& cfg);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

// Simple least squares; requires >= 3 points.
LinearFit linear_fit(const std::vector<double>& xs, const std::vector<double>& ys);

struct ScalingRung {
    std::string kind = "uniform-random";  // or "preferential-attachment"
    std::size_t n = 0;
    double p = 0.0;
    std::size_t edges_per_node = 2;
};

struct ScalingConfig {
    std::vector<ScalingRung> ladder;
    ThresholdSpec spec = ThresholdSpec::fraction_of_in_degree(0.5);
    std::uint64_t rng_seed = 1;
    std::size_t repeats = 5;  // runtime per rung is the median over repeats
};

struct ScalingResult {
    std::vector<TrialRecord> records;
    std::vector<double> x_mlogn;   // m * ln n per rung
    std::vector<double> y_ms;      // decomposition runtime per rung
    std::optional<LinearFit> fit;  // absent below 3 rungs
};

// Times the decomposition across a synthetic ladder and regresses runtime
// on m*ln n. Only the algorithm is timed, not generation or setup.
ScalingResult run_runtime_scaling(const ScalingConfig& cfg);

// Greedy seeding for each configured centrality measure next to the
// decomposition size, plus the degree bound row where it applies
// (symmetric graph, integer threshold); inapplicable bounds are absent.
std::vector<TrialRecord> compare_baselines(const DirectedGraph& g, const TrialConfig& cfg);

// Fixed column set:
// network,n,m,mode,value,algorithm,seed_size,seed_fraction,runtime_ms,
// steps,critical_step,critical_pct,removal_fraction
void write_records_csv(const std::vector<TrialRecord>& records, std::ostream& out);
void write_records_json(const std::vector<TrialRecord>& records, std::ostream& out);

}  // namespace tipseed
