#include "tipseed/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "json.hpp"
#include "tipseed/exact.hpp"

namespace tipseed {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

std::string format_value(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

}  // namespace

std::vector<std::pair<std::string, double>> threshold_settings(const TrialConfig& cfg) {
    std::vector<std::pair<std::string, double>> settings;
    switch (cfg.mode) {
        case ThresholdMode::IntegerSweep:
            for (int k = 1; k <= 10; ++k) settings.emplace_back("int", k);
            break;
        case ThresholdMode::FractionSweep:
            for (int j = 1; j <= 12; ++j) settings.emplace_back("frac", j * 0.05);
            break;
        case ThresholdMode::SingleInt:
            settings.emplace_back("int", cfg.int_value);
            break;
        case ThresholdMode::SingleFraction:
            settings.emplace_back("frac", cfg.frac_value);
            break;
    }
    return settings;
}

ThresholdSpec spec_for(const std::string& mode, double value) {
    if (mode == "int") {
        return ThresholdSpec::absolute_capped(static_cast<std::uint32_t>(value));
    }
    return ThresholdSpec::fraction_of_in_degree(value);
}

namespace {

TrialRecord base_record(const DirectedGraph& g, const TrialConfig& cfg, const std::string& mode,
                        double value, const std::string& algorithm) {
    TrialRecord rec;
    rec.network = cfg.network_name;
    rec.n = g.node_count();
    rec.m = g.edge_count();
    rec.mode = mode;
    rec.value = value;
    rec.algorithm = algorithm;
    return rec;
}

void attach_seed_metrics(TrialRecord& rec, const DirectedGraph& g, const ThresholdAssignment& ka,
                         const SeedSet& seed) {
    rec.seed_size = static_cast<double>(seed.size());
    rec.seed_fraction =
        g.node_count() == 0 ? 0.0
                            : static_cast<double>(seed.size()) / static_cast<double>(g.node_count());
    FixpointResult fp = activate_fixpoint(g, ka, seed);
    rec.steps = fp.trace.steps.size();
    CriticalMass cm = critical_mass_step(fp.trace);
    rec.critical_step = cm.step;
    rec.critical_pct = cm.percent;
}

void sort_records(std::vector<TrialRecord>& records) {
    std::stable_sort(records.begin(), records.end(), [](const TrialRecord& a, const TrialRecord& b) {
        if (a.mode != b.mode) return a.mode < b.mode;
        if (a.value != b.value) return a.value < b.value;
        return a.algorithm < b.algorithm;
    });
}

const std::vector<std::string>& all_measure_names() {
    static const std::vector<std::string> names = {"degree",     "betweenness", "closeness",
                                                   "shell",      "eigenvector", "pagerank"};
    return names;
}

}  // namespace

std::vector<TrialRecord> run_threshold_sweep(const DirectedGraph& g, const TrialConfig& cfg) {
    std::vector<TrialRecord> records;
    if (g.node_count() == 0) return records;

    // centrality rankings are threshold independent
    std::vector<std::pair<std::string, CentralityScores>> score_cache;
    auto scores_for = [&](const std::string& name) -> const CentralityScores& {
        for (const auto& [key, scores] : score_cache) {
            if (key == name) return scores;
        }
        auto measure = measure_from_name(name);
        if (!measure) throw std::invalid_argument("unknown centrality measure: " + name);
        CentralityScores scores;
        switch (*measure) {
            case Measure::Degree: scores = degree_centrality(g); break;
            case Measure::Betweenness: scores = betweenness(g); break;
            case Measure::Closeness: scores = closeness(g); break;
            case Measure::Shell: scores = shell_number(g); break;
            case Measure::Eigenvector: scores = eigenvector_centrality(g); break;
            case Measure::PageRank: scores = pagerank(g); break;
        }
        score_cache.emplace_back(name, std::move(scores));
        return score_cache.back().second;
    };

    for (const auto& [mode, value] : threshold_settings(cfg)) {
        ThresholdSpec spec = spec_for(mode, value);
        ThresholdAssignment ka = compute_thresholds(g, spec);
        for (const std::string& algorithm : cfg.algorithms) {
            TrialRecord rec = base_record(g, cfg, mode, value, algorithm);
            try {
                if (algorithm == "decomp") {
                    auto start = std::chrono::steady_clock::now();
                    DecompResult dr = tip_decomp(g, ka);
                    rec.runtime_ms = elapsed_ms(start);
                    if (!covers(g, ka, dr.seed)) {
                        throw std::logic_error("decomposition seed failed the coverage re-check");
                    }
                    attach_seed_metrics(rec, g, ka, dr.seed);
                } else if (algorithm == "bruteforce") {
                    auto start = std::chrono::steady_clock::now();
                    SeedSet seed = min_seed_bruteforce(g, ka, cfg.bruteforce_limit);
                    rec.runtime_ms = elapsed_ms(start);
                    attach_seed_metrics(rec, g, ka, seed);
                } else if (algorithm == "ip-export") {
                    auto start = std::chrono::steady_clock::now();
                    IpModel model = build_seed_ip(g, spec);
                    std::string path = (cfg.out_stem.empty() ? cfg.network_name : cfg.out_stem) +
                                       "_" + mode + "_" + format_value(value) + ".lp";
                    std::ofstream lp(path);
                    if (!lp) throw std::runtime_error("cannot write " + path);
                    export_lp(model, lp);
                    rec.runtime_ms = elapsed_ms(start);
                } else if (algorithm.rfind("greedy-", 0) == 0) {
                    const CentralityScores& scores = scores_for(algorithm.substr(7));
                    auto start = std::chrono::steady_clock::now();
                    SeedSet seed = greedy_centrality_seed(g, ka, scores);
                    rec.runtime_ms = elapsed_ms(start);
                    attach_seed_metrics(rec, g, ka, seed);
                } else {
                    throw std::invalid_argument("unknown algorithm: " + algorithm);
                }
            } catch (const std::exception& e) {
                rec.failed = true;
                rec.error = e.what();
            }
            records.push_back(std::move(rec));
        }
    }
    sort_records(records);
    return records;
}

std::vector<TrialRecord> run_degree_removal(const DirectedGraph& g, const TrialConfig& cfg) {
    for (double p : cfg.removal_fractions) {
        if (p < 0.0 || p > 0.5) {
            throw std::invalid_argument("removal fractions must lie in [0, 0.5]");
        }
    }
    std::vector<double> fractions = cfg.removal_fractions;
    std::sort(fractions.begin(), fractions.end());

    // total order: degree descending, id ascending
    std::vector<NodeId> ranked(g.node_count());
    std::iota(ranked.begin(), ranked.end(), 0);
    std::sort(ranked.begin(), ranked.end(), [&](NodeId a, NodeId b) {
        if (g.total_degree(a) != g.total_degree(b)) return g.total_degree(a) > g.total_degree(b);
        return a < b;
    });

    std::vector<TrialRecord> records;
    for (double p : fractions) {
        auto victims_count = static_cast<std::size_t>(std::floor(p * static_cast<double>(g.node_count())));
        std::vector<NodeId> victims(ranked.begin(), ranked.begin() + victims_count);
        InducedSubgraph sub = remove_nodes(g, victims);

        for (const auto& [mode, value] : threshold_settings(cfg)) {
            TrialRecord rec = base_record(sub.graph, cfg, mode, value, "decomp");
            rec.removal_fraction = p;
            try {
                ThresholdSpec spec = spec_for(mode, value);
                ThresholdAssignment ka = compute_thresholds(sub.graph, spec);
                auto start = std::chrono::steady_clock::now();
                DecompResult dr = tip_decomp(sub.graph, ka);
                rec.runtime_ms = elapsed_ms(start);
                if (!covers(sub.graph, ka, dr.seed)) {
                    throw std::logic_error("decomposition seed failed the coverage re-check");
                }
                attach_seed_metrics(rec, sub.graph, ka, dr.seed);
            } catch (const std::exception& e) {
                rec.failed = true;
                rec.error = e.what();
            }
            records.push_back(std::move(rec));
        }
    }
    sort_records(records);
    return records;
}

SpeedResult run_activation_speed(const DirectedGraph& g, const TrialConfig& cfg) {
    SpeedResult result;
    for (const auto& [mode, value] : threshold_settings(cfg)) {
        ThresholdSpec spec = spec_for(mode, value);
        ThresholdAssignment ka = compute_thresholds(g, spec);
        TrialRecord rec = base_record(g, cfg, mode, value, "decomp");
        try {
            auto start = std::chrono::steady_clock::now();
            DecompResult dr = tip_decomp(g, ka);
            rec.runtime_ms = elapsed_ms(start);
            FixpointResult fp = activate_fixpoint(g, ka, dr.seed);
            if (fp.final_set.size() != g.node_count()) {
                throw std::logic_error("decomposition seed failed the coverage re-check");
            }
            attach_seed_metrics(rec, g, ka, dr.seed);
            result.traces.emplace_back(mode + "=" + format_value(value), std::move(fp.trace));
        } catch (const std::exception& e) {
            rec.failed = true;
            rec.error = e.what();
        }
        result.records.push_back(std::move(rec));
    }
    sort_records(result.records);
    return result;
}

LinearFit linear_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("mismatched fit inputs");
    if (xs.size() < 3) throw std::invalid_argument("linear fit needs at least 3 points");
    const auto n = static_cast<double>(xs.size());
    double sx = std::accumulate(xs.begin(), xs.end(), 0.0);
    double sy = std::accumulate(ys.begin(), ys.end(), 0.0);
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-30) throw std::invalid_argument("degenerate fit: constant x");
    LinearFit fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    double mean_y = sy / n;
    double ss_res = 0.0;
    double ss_tot = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double predicted = fit.slope * xs[i] + fit.intercept;
        ss_res += (ys[i] - predicted) * (ys[i] - predicted);
        ss_tot += (ys[i] - mean_y) * (ys[i] - mean_y);
    }
    fit.r_squared = ss_tot <= 1e-30 ? 1.0 : 1.0 - ss_res / ss_tot;
    return fit;
}

ScalingResult run_runtime_scaling(const ScalingConfig& cfg) {
    ScalingResult result;
    for (std::size_t i = 0; i < cfg.ladder.size(); ++i) {
        const ScalingRung& rung = cfg.ladder[i];
        SyntheticParams params;
        params.kind = rung.kind;
        params.n = rung.n;
        params.p = rung.p;
        params.edges_per_node = rung.edges_per_node;
        params.seed = cfg.rng_seed + i;
        DirectedGraph g = make_synthetic(params);
        ThresholdAssignment ka = compute_thresholds(g, cfg.spec);

        std::vector<double> times;
        DecompResult dr;
        for (std::size_t rep = 0; rep < std::max<std::size_t>(cfg.repeats, 1); ++rep) {
            auto start = std::chrono::steady_clock::now();
            dr = tip_decomp(g, ka);
            times.push_back(elapsed_ms(start));
        }
        std::sort(times.begin(), times.end());
        double median = times[times.size() / 2];
        if (!covers(g, ka, dr.seed)) {
            throw std::logic_error("decomposition seed failed the coverage re-check");
        }

        TrialRecord rec;
        rec.network = rung.kind + "-" + std::to_string(rung.n);
        rec.n = g.node_count();
        rec.m = g.edge_count();
        rec.mode = cfg.spec.kind == ThresholdSpec::Kind::FractionOfInDegree ? "frac" : "int";
        rec.value = cfg.spec.kind == ThresholdSpec::Kind::FractionOfInDegree
                        ? cfg.spec.fraction
                        : static_cast<double>(cfg.spec.count);
        rec.algorithm = "decomp";
        rec.runtime_ms = median;
        rec.seed_size = static_cast<double>(dr.seed.size());
        rec.seed_fraction = g.node_count() == 0
                                ? 0.0
                                : rec.seed_size / static_cast<double>(g.node_count());
        result.records.push_back(rec);

        result.x_mlogn.push_back(static_cast<double>(g.edge_count()) *
                                 std::log(static_cast<double>(std::max<std::size_t>(g.node_count(), 2))));
        result.y_ms.push_back(median);
    }
    if (result.x_mlogn.size() >= 3) {
        result.fit = linear_fit(result.x_mlogn, result.y_ms);
    }
    return result;
}

std::vector<TrialRecord> compare_baselines(const DirectedGraph& g, const TrialConfig& cfg) {
    std::vector<TrialRecord> records;
    const std::vector<std::string>& measures =
        cfg.measures.empty() ? all_measure_names() : cfg.measures;

    TrialConfig sweep_cfg = cfg;
    sweep_cfg.algorithms = {"decomp"};
    for (const std::string& m : measures) sweep_cfg.algorithms.push_back("greedy-" + m);
    records = run_threshold_sweep(g, sweep_cfg);

    // one bound row per applicable integer setting
    if (g.node_count() > 0 && g.is_symmetric()) {
        for (const auto& [mode, value] : threshold_settings(cfg)) {
            if (mode != "int") continue;
            TrialRecord rec = base_record(g, cfg, mode, value, "reichman-bound");
            rec.seed_size = reichman_bound(g, static_cast<std::uint32_t>(value));
            rec.seed_fraction = rec.seed_size / static_cast<double>(g.node_count());
            records.push_back(std::move(rec));
        }
    }
    sort_records(records);
    return records;
}

namespace {

void csv_cell(std::ostream& out, double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    out << buf;
}

}  // namespace

void write_records_csv(const std::vector<TrialRecord>& records, std::ostream& out) {
    out << "network,n,m,mode,value,algorithm,seed_size,seed_fraction,runtime_ms,steps,"
           "critical_step,critical_pct,removal_fraction\n";
    for (const TrialRecord& rec : records) {
        out << rec.network << ',' << rec.n << ',' << rec.m << ',' << rec.mode << ',';
        csv_cell(out, rec.value);
        out << ',' << rec.algorithm << ',';
        if (!rec.failed) {
            csv_cell(out, rec.seed_size);
            out << ',';
            csv_cell(out, rec.seed_fraction);
            out << ',';
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.3f", rec.runtime_ms);
            out << buf << ',' << rec.steps << ',' << rec.critical_step << ',';
            csv_cell(out, rec.critical_pct);
        } else {
            out << ",,,,,";
        }
        out << ',';
        if (rec.removal_fraction) csv_cell(out, *rec.removal_fraction);
        out << '\n';
    }
}

void write_records_json(const std::vector<TrialRecord>& records, std::ostream& out) {
    nlohmann::json doc = nlohmann::json::array();
    for (const TrialRecord& rec : records) {
        nlohmann::json row;
        row["network"] = rec.network;
        row["n"] = rec.n;
        row["m"] = rec.m;
        row["mode"] = rec.mode;
        row["value"] = rec.value;
        row["algorithm"] = rec.algorithm;
        if (rec.failed) {
            row["error"] = rec.error;
        } else {
            row["seed_size"] = rec.seed_size;
            row["seed_fraction"] = rec.seed_fraction;
            row["runtime_ms"] = rec.runtime_ms;
            row["steps"] = rec.steps;
            row["critical_step"] = rec.critical_step;
            row["critical_pct"] = rec.critical_pct;
        }
        if (rec.removal_fraction) row["removal_fraction"] = *rec.removal_fraction;
        doc.push_back(std::move(row));
    }
    out << doc.dump(2) << '\n';
}

}  // namespace tipseed
