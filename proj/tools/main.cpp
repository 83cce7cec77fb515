#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tipseed/centrality.hpp"
#include "tipseed/decomp.hpp"
#include "tipseed/errors.hpp"
#include "tipseed/exact.hpp"
#include "tipseed/generators.hpp"
#include "tipseed/harness.hpp"
#include "tipseed/structure.hpp"
#include "tipseed/tipping.hpp"

namespace {

using namespace tipseed;

struct CommonOpts {
    std::string graph_path;
    bool symmetrize = false;
    std::optional<std::uint32_t> threshold_int;
    std::optional<double> threshold_frac;
    bool int_sweep = false;
    bool frac_sweep = false;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string format = "csv";
};

void add_graph_options(CLI::App* cmd, CommonOpts& opts, bool required = true) {
    auto* graph = cmd->add_option("--graph", opts.graph_path, "edge-list file to load");
    if (required) graph->required();
    cmd->add_flag("--symmetrize", opts.symmetrize, "add the reverse of every edge");
}

void add_threshold_options(CLI::App* cmd, CommonOpts& opts, bool sweeps = false) {
    cmd->add_option("--threshold-int", opts.threshold_int,
                    "homogeneous integer threshold, capped at each in-degree");
    cmd->add_option("--threshold-frac", opts.threshold_frac,
                    "threshold as a fraction of in-degree, in (0,1]");
    if (sweeps) {
        cmd->add_flag("--int-sweep", opts.int_sweep, "sweep integer thresholds 1..10");
        cmd->add_flag("--frac-sweep", opts.frac_sweep,
                      "sweep fractions 0.05..0.60 in steps of 0.05");
    }
}

void add_output_options(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--out", opts.out_path, "output file (default: stdout)");
    cmd->add_option("--format", opts.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--seed", opts.seed, "rng seed for randomized components");
}

DirectedGraph load_graph(const CommonOpts& opts) {
    return load_edge_list_file(opts.graph_path, opts.symmetrize);
}

std::string network_name(const CommonOpts& opts) {
    if (opts.graph_path.empty()) return "graph";
    return std::filesystem::path(opts.graph_path).stem().string();
}

ThresholdSpec single_spec(const CommonOpts& opts) {
    if (opts.threshold_int && opts.threshold_frac) {
        throw std::invalid_argument("choose one of --threshold-int / --threshold-frac");
    }
    if (opts.threshold_int) return ThresholdSpec::absolute_capped(*opts.threshold_int);
    if (opts.threshold_frac) return ThresholdSpec::fraction_of_in_degree(*opts.threshold_frac);
    throw std::invalid_argument("a threshold is required (--threshold-int or --threshold-frac)");
}

TrialConfig trial_config(const CommonOpts& opts) {
    TrialConfig cfg;
    cfg.network_name = network_name(opts);
    cfg.rng_seed = opts.seed;
    if (opts.int_sweep && opts.frac_sweep) {
        throw std::invalid_argument("choose one of --int-sweep / --frac-sweep");
    }
    if (opts.int_sweep) {
        cfg.mode = ThresholdMode::IntegerSweep;
    } else if (opts.frac_sweep) {
        cfg.mode = ThresholdMode::FractionSweep;
    } else if (opts.threshold_int) {
        cfg.mode = ThresholdMode::SingleInt;
        cfg.int_value = *opts.threshold_int;
    } else if (opts.threshold_frac) {
        cfg.mode = ThresholdMode::SingleFraction;
        cfg.frac_value = *opts.threshold_frac;
    } else {
        throw std::invalid_argument(
            "a threshold is required (--threshold-int, --threshold-frac, or a sweep flag)");
    }
    if (!opts.out_path.empty()) {
        cfg.out_stem = std::filesystem::path(opts.out_path).replace_extension("").string();
    }
    return cfg;
}

// Writes to the chosen sink, defaulting to stdout.
void with_output(const CommonOpts& opts, const std::function<void(std::ostream&)>& body) {
    if (opts.out_path.empty()) {
        body(std::cout);
        return;
    }
    std::ofstream out(opts.out_path);
    if (!out) throw std::runtime_error("cannot write " + opts.out_path);
    body(out);
}

void emit_records(const std::vector<TrialRecord>& records, const CommonOpts& opts) {
    with_output(opts, [&](std::ostream& out) {
        if (opts.format == "json") {
            write_records_json(records, out);
        } else {
            write_records_csv(records, out);
        }
    });
}

ThresholdAssignment thresholds_for(const DirectedGraph& g, const CommonOpts& opts) {
    return compute_thresholds(g, single_spec(opts));
}

int run_app(int argc, char** argv) {
    CLI::App app{"seed-set computation and experiments for the deterministic tipping model"};
    app.require_subcommand(1);

    CommonOpts opts;

    // decomp
    auto* decomp_cmd = app.add_subcommand("decomp", "decomposition seed for one threshold");
    add_graph_options(decomp_cmd, opts);
    add_threshold_options(decomp_cmd, opts);
    add_output_options(decomp_cmd, opts);
    decomp_cmd->callback([&]() {
        DirectedGraph g = load_graph(opts);
        ThresholdAssignment ka = thresholds_for(g, opts);
        DecompResult result = tip_decomp(g, ka);
        if (!covers(g, ka, result.seed)) {
            throw std::logic_error("decomposition seed failed the coverage re-check");
        }
        with_output(opts, [&](std::ostream& out) {
            if (opts.format == "json") {
                write_decomp_json(g, result, out);
            } else {
                TrialConfig cfg = trial_config(opts);
                std::vector<TrialRecord> records = run_threshold_sweep(g, cfg);
                write_records_csv(records, out);
            }
        });
        std::cerr << "seed size " << result.seed.size() << " of " << g.node_count()
                  << " nodes\n";
    });

    // exact
    std::size_t exact_limit = 20;
    bool with_ip_route = false;
    auto* exact_cmd = app.add_subcommand("exact", "minimum seed by exhaustive search");
    add_graph_options(exact_cmd, opts);
    add_threshold_options(exact_cmd, opts);
    add_output_options(exact_cmd, opts);
    exact_cmd->add_option("--limit", exact_limit, "largest instance the search accepts");
    exact_cmd->add_flag("--ip-dynamics", with_ip_route,
                        "also solve by enumerating program trajectories");
    exact_cmd->callback([&]() {
        DirectedGraph g = load_graph(opts);
        ThresholdSpec spec = single_spec(opts);
        ThresholdAssignment ka = compute_thresholds(g, spec);
        SeedSet seed = min_seed_bruteforce(g, ka, exact_limit);
        nlohmann::json doc;
        doc["n"] = g.node_count();
        doc["m"] = g.edge_count();
        doc["minimum_seed"] = seed;
        doc["minimum_seed_size"] = seed.size();
        if (with_ip_route) {
            SeedSet ip_seed = solve_seed_ip_small(g, spec, std::min<std::size_t>(exact_limit, 12));
            doc["ip_seed"] = ip_seed;
            doc["ip_seed_size"] = ip_seed.size();
        }
        with_output(opts, [&](std::ostream& out) { out << doc.dump(2) << '\n'; });
    });

    // ip-export
    auto* ip_cmd = app.add_subcommand("ip-export", "write the seed-minimization program as LP text");
    add_graph_options(ip_cmd, opts);
    add_threshold_options(ip_cmd, opts);
    add_output_options(ip_cmd, opts);
    ip_cmd->callback([&]() {
        DirectedGraph g = load_graph(opts);
        IpModel model = build_seed_ip(g, single_spec(opts));
        with_output(opts, [&](std::ostream& out) { export_lp(model, out); });
        std::cerr << model.variable_count() << " variables, " << model.constraint_count()
                  << " constraints\n";
    });

    // sweep
    std::vector<std::string> algorithms = {"decomp"};
    auto* sweep_cmd = app.add_subcommand("sweep", "seed sizes across threshold settings");
    add_graph_options(sweep_cmd, opts);
    add_threshold_options(sweep_cmd, opts, true);
    add_output_options(sweep_cmd, opts);
    sweep_cmd->add_option("--algorithms", algorithms,
                          "decomp, bruteforce, ip-export, greedy-<measure>");
    sweep_cmd->callback([&]() {
        DirectedGraph g = load_graph(opts);
        TrialConfig cfg = trial_config(opts);
        cfg.algorithms = algorithms;
        emit_records(run_threshold_sweep(g, cfg), opts);
    });

    // removal
    std::vector<double> fractions;
    auto* removal_cmd =
        app.add_subcommand("removal", "seed sizes after pruning the highest-degree nodes");
    add_graph_options(removal_cmd, opts);
    add_threshold_options(removal_cmd, opts, true);
    add_output_options(removal_cmd, opts);
    removal_cmd->add_option("--fractions", fractions,
                            "fractions of nodes to remove, each in [0, 0.5]");
    removal_cmd->callback([&]() {
        DirectedGraph g = load_graph(opts);
        TrialConfig cfg = trial_config(opts);
        if (fractions.empty()) {
            for (int i = 0; i <= 10; ++i) fractions.push_back(i * 0.05);
        }
        cfg.removal_fractions = fractions;
        emit_records(run_degree_removal(g, cfg), opts);
    });

    // speed
    auto* speed_cmd = app.add_subcommand("speed", "cascade trace from the decomposition seed");
    add_graph_options(speed_cmd, opts);
    add_threshold_options(speed_cmd, opts, true);
    add_output_options(speed_cmd, opts);
    speed_cmd->callback([&]() {
        DirectedGraph g = load_graph(opts);
        TrialConfig cfg = trial_config(opts);
        SpeedResult result = run_activation_speed(g, cfg);
        with_output(opts, [&](std::ostream& out) {
            if (opts.format == "json") {
                write_records_json(result.records, out);
            } else if (result.traces.size() == 1) {
                write_trace_csv(result.traces.front().second, out);
            } else {
                for (const auto& [key, trace] : result.traces) {
                    out << "# " << key << '\n';
                    write_trace_csv(trace, out);
                }
            }
        });
        for (const TrialRecord& rec : result.records) {
            std::cerr << rec.mode << "=" << rec.value << ": " << rec.steps
                      << " steps, critical step " << rec.critical_step << " (+"
                      << rec.critical_pct << "%)\n";
        }
    });

    // baselines
    std::vector<std::string> measures;
    auto* base_cmd =
        app.add_subcommand("baselines", "greedy centrality seeding next to the decomposition");
    add_graph_options(base_cmd, opts);
    add_threshold_options(base_cmd, opts, true);
    add_output_options(base_cmd, opts);
    base_cmd->add_option("--measures", measures,
                         "degree, betweenness, closeness, shell, eigenvector, pagerank");
    base_cmd->callback([&]() {
        DirectedGraph g = load_graph(opts);
        TrialConfig cfg = trial_config(opts);
        cfg.measures = measures;
        emit_records(compare_baselines(g, cfg), opts);
    });

    // centrality
    std::string measure_name_opt = "degree";
    auto* cent_cmd = app.add_subcommand("centrality", "per-node scores for one measure");
    add_graph_options(cent_cmd, opts);
    add_output_options(cent_cmd, opts);
    cent_cmd->add_option("--measure", measure_name_opt,
                         "degree, betweenness, closeness, shell, eigenvector, pagerank");
    cent_cmd->callback([&]() {
        DirectedGraph g = load_graph(opts);
        auto measure = measure_from_name(measure_name_opt);
        if (!measure) throw std::invalid_argument("unknown centrality measure: " + measure_name_opt);
        CentralityScores scores;
        switch (*measure) {
            case Measure::Degree: scores = degree_centrality(g); break;
            case Measure::Betweenness: scores = betweenness(g); break;
            case Measure::Closeness: scores = closeness(g); break;
            case Measure::Shell: scores = shell_number(g); break;
            case Measure::Eigenvector: scores = eigenvector_centrality(g); break;
            case Measure::PageRank: scores = pagerank(g); break;
        }
        with_output(opts, [&](std::ostream& out) { write_scores_csv(g, scores, out); });
    });

    // structure
    std::string fit_csv;
    auto* struct_cmd =
        app.add_subcommand("structure", "clustering, community partition, and modularity");
    add_graph_options(struct_cmd, opts, /*required=*/false);
    add_output_options(struct_cmd, opts);
    struct_cmd->add_option("--fit-csv", fit_csv,
                           "CSV of modularity,clustering,seed_pct rows to fit a plane through");
    struct_cmd->callback([&]() {
        if (fit_csv.empty() && opts.graph_path.empty()) {
            throw std::invalid_argument("structure needs --graph or --fit-csv");
        }
        if (!fit_csv.empty()) {
            std::ifstream in(fit_csv);
            if (!in) throw std::runtime_error("cannot open " + fit_csv);
            std::vector<StructurePoint> points;
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty() || line[0] == '#') continue;
                StructurePoint p;
                char comma;
                std::istringstream row(line);
                if (row >> p.modularity >> comma >> p.clustering >> comma >> p.seed_pct) {
                    points.push_back(p);
                }
            }
            PlanarFit fit = planar_fit(points);
            nlohmann::json doc;
            doc["coef_modularity"] = fit.coef_m;
            doc["coef_clustering"] = fit.coef_c;
            doc["intercept"] = fit.intercept;
            doc["r_squared"] = fit.r_squared;
            doc["points"] = points.size();
            with_output(opts, [&](std::ostream& out) { out << doc.dump(2) << '\n'; });
            return;
        }
        DirectedGraph g = load_graph(opts);
        LouvainResult lr = louvain(g);
        double clustering = average_clustering(g);
        with_output(opts, [&](std::ostream& out) {
            if (opts.format == "json") {
                nlohmann::json doc;
                doc["n"] = g.node_count();
                doc["m"] = g.edge_count();
                doc["average_clustering"] = clustering;
                doc["modularity"] = lr.modularity;
                doc["communities"] =
                    lr.partition.empty()
                        ? 0
                        : *std::max_element(lr.partition.begin(), lr.partition.end()) + 1;
                out << doc.dump(2) << '\n';
            } else {
                write_partition_csv(g, lr.partition, out);
            }
        });
        std::cerr << "average clustering " << clustering << ", modularity " << lr.modularity
                  << '\n';
    });

    // scaling
    std::vector<std::size_t> ladder_sizes;
    double avg_degree = 10.0;
    std::size_t repeats = 5;
    auto* scale_cmd =
        app.add_subcommand("scaling", "decomposition runtime against m*ln n on synthetic graphs");
    add_output_options(scale_cmd, opts);
    scale_cmd->add_option("--sizes", ladder_sizes, "node counts for the synthetic ladder");
    scale_cmd->add_option("--avg-degree", avg_degree, "average undirected degree per rung");
    scale_cmd->add_option("--repeats", repeats, "timing repeats per rung (median is kept)");
    add_threshold_options(scale_cmd, opts);
    scale_cmd->callback([&]() {
        if (ladder_sizes.empty()) {
            ladder_sizes = {5000, 10000, 20000, 40000, 70000, 100000};
        }
        ScalingConfig cfg;
        cfg.rng_seed = opts.seed == 0 ? 1 : opts.seed;
        cfg.repeats = repeats;
        if (opts.threshold_int) {
            cfg.spec = ThresholdSpec::absolute_capped(*opts.threshold_int);
        } else if (opts.threshold_frac) {
            cfg.spec = ThresholdSpec::fraction_of_in_degree(*opts.threshold_frac);
        }
        for (std::size_t n : ladder_sizes) {
            ScalingRung rung;
            rung.n = n;
            rung.p = std::min(1.0, avg_degree / static_cast<double>(n > 1 ? n - 1 : 1));
            cfg.ladder.push_back(rung);
        }
        ScalingResult result = run_runtime_scaling(cfg);
        emit_records(result.records, opts);
        if (result.fit) {
            std::cerr << "runtime ~ " << result.fit->slope << " * m*ln(n) + "
                      << result.fit->intercept << "  (R^2 = " << result.fit->r_squared << ")\n";
        } else {
            std::cerr << "fit skipped: need at least 3 ladder sizes\n";
        }
    });

    // gen
    SyntheticParams gen_params;
    auto* gen_cmd = app.add_subcommand("gen", "write a synthetic graph as an edge list");
    gen_cmd->add_option("--kind", gen_params.kind,
                        "cycle, star, path, clique, uniform-random, preferential-attachment")
        ->required();
    gen_cmd->add_option("--n", gen_params.n, "node count")->required();
    gen_cmd->add_option("--p", gen_params.p, "edge probability (uniform-random)");
    gen_cmd->add_option("--epn", gen_params.edges_per_node,
                        "edges per node (preferential-attachment)");
    gen_cmd->add_flag("--directed", gen_params.directed, "skip symmetrization");
    add_output_options(gen_cmd, opts);
    gen_cmd->callback([&]() {
        gen_params.seed = opts.seed;
        DirectedGraph g = make_synthetic(gen_params);
        with_output(opts, [&](std::ostream& out) {
            out << "# synthetic " << gen_params.kind << " n=" << g.node_count()
                << " m=" << g.edge_count() << " seed=" << gen_params.seed << '\n';
            write_edge_list(g, out);
        });
    });

    CLI11_PARSE(app, argc, argv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_app(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
