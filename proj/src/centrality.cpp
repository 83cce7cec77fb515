#include "tipseed/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <queue>
#include <stdexcept>

#include "tipseed/errors.hpp"

namespace tipseed {

const char* measure_name(Measure m) {
    switch (m) {
        case Measure::Degree: return "degree";
        case Measure::Betweenness: return "betweenness";
        case Measure::Closeness: return "closeness";
        case Measure::Shell: return "shell";
        case Measure::Eigenvector: return "eigenvector";
        case Measure::PageRank: return "pagerank";
    }
    return "unknown";
}

std::optional<Measure> measure_from_name(std::string_view name) {
    if (name == "degree") return Measure::Degree;
    if (name == "betweenness") return Measure::Betweenness;
    if (name == "closeness") return Measure::Closeness;
    if (name == "shell") return Measure::Shell;
    if (name == "eigenvector") return Measure::Eigenvector;
    if (name == "pagerank") return Measure::PageRank;
    return std::nullopt;
}

CentralityScores degree_centrality(const DirectedGraph& g) {
    CentralityScores scores{Measure::Degree, {}};
    scores.values.reserve(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) {
        scores.values.push_back(static_cast<double>(g.out_degree(v)));
    }
    return scores;
}

CentralityScores betweenness(const DirectedGraph& g) {
    const std::size_t n = g.node_count();
    CentralityScores scores{Measure::Betweenness, std::vector<double>(n, 0.0)};

    std::vector<std::vector<NodeId>> preds(n);
    std::vector<double> sigma(n), delta(n);
    std::vector<std::int64_t> dist(n);
    std::vector<NodeId> order;
    order.reserve(n);

    for (NodeId s = 0; s < n; ++s) {
        for (auto& p : preds) p.clear();
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(dist.begin(), dist.end(), -1);
        order.clear();

        sigma[s] = 1.0;
        dist[s] = 0;
        std::queue<NodeId> frontier;
        frontier.push(s);
        while (!frontier.empty()) {
            NodeId v = frontier.front();
            frontier.pop();
            order.push_back(v);
            for (NodeId w : g.out_neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    frontier.push(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    preds[w].push_back(v);
                }
            }
        }
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            NodeId w = *it;
            for (NodeId v : preds[w]) {
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
            if (w != s) scores.values[w] += delta[w];
        }
    }
    return scores;
}

CentralityScores closeness(const DirectedGraph& g) {
    const std::size_t n = g.node_count();
    CentralityScores scores{Measure::Closeness, std::vector<double>(n, 0.0)};
    std::vector<std::int64_t> dist(n);
    for (NodeId s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::queue<NodeId> frontier;
        frontier.push(s);
        std::size_t reached = 0;
        std::size_t total = 0;
        while (!frontier.empty()) {
            NodeId v = frontier.front();
            frontier.pop();
            for (NodeId w : g.out_neighbors(v)) {
                if (dist[w] >= 0) continue;
                dist[w] = dist[v] + 1;
                ++reached;
                total += static_cast<std::size_t>(dist[w]);
                frontier.push(w);
            }
        }
        if (reached > 0) {
            scores.values[s] = static_cast<double>(reached) / static_cast<double>(total);
        }
    }
    return scores;
}

namespace {

std::vector<std::vector<NodeId>> symmetrized_adjacency(const DirectedGraph& g) {
    std::vector<std::vector<NodeId>> adj(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const auto& outs = g.out_neighbors(v);
        const auto& ins = g.in_neighbors(v);
        adj[v].resize(outs.size() + ins.size());
        std::merge(outs.begin(), outs.end(), ins.begin(), ins.end(), adj[v].begin());
        adj[v].erase(std::unique(adj[v].begin(), adj[v].end()), adj[v].end());
    }
    return adj;
}

}  // namespace

CentralityScores shell_number(const DirectedGraph& g) {
    const std::size_t n = g.node_count();
    CentralityScores scores{Measure::Shell, std::vector<double>(n, 0.0)};
    if (n == 0) return scores;

    auto adj = symmetrized_adjacency(g);
    std::vector<std::size_t> degree(n);
    std::size_t max_degree = 0;
    for (NodeId v = 0; v < n; ++v) {
        degree[v] = adj[v].size();
        max_degree = std::max(max_degree, degree[v]);
    }

    // bucket sort by degree, then peel in place
    std::vector<std::size_t> bin(max_degree + 2, 0);
    for (NodeId v = 0; v < n; ++v) ++bin[degree[v]];
    std::size_t start = 0;
    for (std::size_t d = 0; d <= max_degree; ++d) {
        std::size_t count = bin[d];
        bin[d] = start;
        start += count;
    }
    std::vector<NodeId> vert(n);
    std::vector<std::size_t> pos(n);
    for (NodeId v = 0; v < n; ++v) {
        pos[v] = bin[degree[v]];
        vert[pos[v]] = v;
        ++bin[degree[v]];
    }
    for (std::size_t d = max_degree + 1; d-- > 1;) bin[d] = bin[d - 1];
    bin[0] = 0;

    std::vector<std::size_t> core = degree;
    for (std::size_t i = 0; i < n; ++i) {
        NodeId v = vert[i];
        for (NodeId u : adj[v]) {
            if (core[u] > core[v]) {
                std::size_t du = core[u];
                std::size_t pu = pos[u];
                std::size_t pw = bin[du];
                NodeId w = vert[pw];
                if (u != w) {
                    pos[u] = pw;
                    pos[w] = pu;
                    vert[pu] = w;
                    vert[pw] = u;
                }
                ++bin[du];
                --core[u];
            }
        }
    }
    for (NodeId v = 0; v < n; ++v) scores.values[v] = static_cast<double>(core[v]);
    return scores;
}

CentralityScores eigenvector_centrality(const DirectedGraph& g, double tol,
                                        std::size_t max_iter) {
    const std::size_t n = g.node_count();
    if (g.edge_count() == 0) {
        throw std::invalid_argument("eigenvector centrality needs at least one edge");
    }
    CentralityScores scores{Measure::Eigenvector, std::vector<double>(n, 1.0)};
    std::vector<double> next(n);
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        double biggest = 0.0;
        for (NodeId v = 0; v < n; ++v) {
            double acc = scores.values[v];
            for (NodeId u : g.in_neighbors(v)) acc += scores.values[u];
            next[v] = acc;
            biggest = std::max(biggest, acc);
        }
        double diff = 0.0;
        for (NodeId v = 0; v < n; ++v) {
            next[v] /= biggest;
            diff = std::max(diff, std::abs(next[v] - scores.values[v]));
        }
        scores.values.swap(next);
        if (diff < tol) return scores;
    }
    throw ConvergenceError("eigenvector centrality did not converge in " +
                           std::to_string(max_iter) + " iterations");
}

CentralityScores pagerank(const DirectedGraph& g, double damping, double tol,
                          std::size_t max_iter) {
    const std::size_t n = g.node_count();
    CentralityScores scores{Measure::PageRank, std::vector<double>(n, 0.0)};
    if (n == 0) return scores;

    std::fill(scores.values.begin(), scores.values.end(), 1.0 / static_cast<double>(n));
    std::vector<double> next(n);
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        double dangling = 0.0;
        for (NodeId v = 0; v < n; ++v) {
            if (g.out_degree(v) == 0) dangling += scores.values[v];
        }
        double base = (1.0 - damping) / static_cast<double>(n) +
                      damping * dangling / static_cast<double>(n);
        double diff = 0.0;
        for (NodeId v = 0; v < n; ++v) {
            double acc = 0.0;
            for (NodeId u : g.in_neighbors(v)) {
                acc += scores.values[u] / static_cast<double>(g.out_degree(u));
            }
            next[v] = base + damping * acc;
            diff += std::abs(next[v] - scores.values[v]);
        }
        scores.values.swap(next);
        if (diff < tol) return scores;
    }
    throw ConvergenceError("pagerank did not converge in " + std::to_string(max_iter) +
                           " iterations");
}

SeedSet greedy_centrality_seed(const DirectedGraph& g, const ThresholdAssignment& ka,
                               const CentralityScores& scores) {
    const std::size_t n = g.node_count();
    if (scores.values.size() != n) {
        throw std::invalid_argument("scores do not cover the graph");
    }
    std::vector<NodeId> ranked(n);
    std::iota(ranked.begin(), ranked.end(), 0);
    std::sort(ranked.begin(), ranked.end(), [&](NodeId a, NodeId b) {
        if (scores.values[a] != scores.values[b]) return scores.values[a] > scores.values[b];
        return a < b;
    });

    SeedSet prefix;
    if (covers(g, ka, prefix)) return prefix;
    for (NodeId v : ranked) {
        prefix.push_back(v);
        if (covers(g, ka, prefix)) {
            std::sort(prefix.begin(), prefix.end());
            return prefix;
        }
    }
    std::sort(prefix.begin(), prefix.end());
    return prefix;  // unreachable: the full set covers
}

double reichman_bound(const DirectedGraph& g, std::uint32_t k) {
    if (k < 1) throw std::invalid_argument("threshold must be >= 1");
    if (!g.is_symmetric()) {
        throw ApplicabilityError("the seed-size bound applies to symmetric graphs only");
    }
    double total = 0.0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        double d = static_cast<double>(g.out_degree(v));
        total += std::min(1.0, static_cast<double>(k) / (d + 1.0));
    }
    return total;
}

void write_scores_csv(const DirectedGraph& g, const CentralityScores& scores, std::ostream& out) {
    out << "node,measure,score\n";
    char buf[48];
    for (NodeId v = 0; v < scores.values.size(); ++v) {
        std::snprintf(buf, sizeof(buf), "%.12g", scores.values[v]);
        out << g.label_or_index(v) << ',' << measure_name(scores.measure) << ',' << buf << '\n';
    }
}

}  // namespace tipseed
