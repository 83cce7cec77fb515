#include "tipseed/structure.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "tipseed/errors.hpp"

namespace tipseed {

namespace {

void require_symmetric(const DirectedGraph& g, const char* what) {
    if (!g.is_symmetric()) {
        throw ApplicabilityError(std::string(what) + " is defined for symmetric graphs only");
    }
}

std::size_t sorted_intersection_size(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
    std::size_t count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++count;
            ++ia;
            ++ib;
        }
    }
    return count;
}

double clustering_of(const DirectedGraph& g, NodeId i) {
    const auto& nbrs = g.out_neighbors(i);
    std::size_t d = nbrs.size();
    if (d < 2) return 0.0;
    std::size_t links = 0;  // neighbor pairs sharing an edge, each counted twice
    for (NodeId u : nbrs) links += sorted_intersection_size(nbrs, g.out_neighbors(u));
    double r = static_cast<double>(links) / 2.0;
    return 2.0 * r / (static_cast<double>(d) * static_cast<double>(d - 1));
}

}  // namespace

double local_clustering(const DirectedGraph& g, NodeId i) {
    require_symmetric(g, "clustering coefficient");
    if (i >= g.node_count()) throw std::invalid_argument("unknown node id");
    return clustering_of(g, i);
}

double average_clustering(const DirectedGraph& g) {
    require_symmetric(g, "clustering coefficient");
    if (g.node_count() == 0) return 0.0;
    double total = 0.0;
    for (NodeId v = 0; v < g.node_count(); ++v) total += clustering_of(g, v);
    return total / static_cast<double>(g.node_count());
}

namespace {

std::uint32_t community_count(const Partition& partition) {
    std::uint32_t q = 0;
    for (std::uint32_t c : partition) q = std::max(q, c + 1);
    return q;
}

}  // namespace

double modularity(const DirectedGraph& g, const Partition& partition) {
    require_symmetric(g, "modularity");
    const std::size_t n = g.node_count();
    if (partition.size() != n) throw std::invalid_argument("partition does not cover the graph");
    std::size_t undirected_m = g.edge_count() / 2;
    if (undirected_m == 0) throw std::domain_error("modularity is undefined without edges");

    std::uint32_t q = community_count(partition);
    std::vector<double> intra(q, 0.0);   // undirected edges inside each community
    std::vector<double> degsum(q, 0.0);  // summed degrees per community
    for (NodeId u = 0; u < n; ++u) {
        degsum[partition[u]] += static_cast<double>(g.out_degree(u));
        for (NodeId v : g.out_neighbors(u)) {
            if (u < v && partition[u] == partition[v]) intra[partition[u]] += 1.0;
        }
    }
    double m = static_cast<double>(undirected_m);
    double score = 0.0;
    for (std::uint32_t c = 0; c < q; ++c) {
        double expected = degsum[c] / (2.0 * m);
        score += intra[c] / m - expected * expected;
    }
    return score;
}

namespace {

// Weighted undirected multigraph for the aggregation phases. self_weight[v]
// counts internal edge ends (already doubled), so strengths and totals keep
// matching the flat graph across levels.
struct WeightedGraph {
    std::vector<std::vector<std::pair<std::uint32_t, double>>> adj;
    std::vector<double> self_weight;
    std::vector<double> strength;
    double total = 0.0;  // 2W

    std::size_t size() const { return adj.size(); }
};

WeightedGraph from_graph(const DirectedGraph& g) {
    WeightedGraph wg;
    wg.adj.resize(g.node_count());
    wg.self_weight.assign(g.node_count(), 0.0);
    wg.strength.assign(g.node_count(), 0.0);
    for (NodeId u = 0; u < g.node_count(); ++u) {
        for (NodeId v : g.out_neighbors(u)) {
            wg.adj[u].push_back({v, 1.0});
        }
        wg.strength[u] = static_cast<double>(g.out_degree(u));
        wg.total += wg.strength[u];
    }
    return wg;
}

constexpr double kMinGain = 1e-12;

// One local-moving phase; returns the node->community map (dense ids) and
// whether any node moved.
std::pair<std::vector<std::uint32_t>, bool> local_moving(const WeightedGraph& wg) {
    const std::size_t n = wg.size();
    const double w = wg.total / 2.0;
    std::vector<std::uint32_t> comm(n);
    std::iota(comm.begin(), comm.end(), 0);
    std::vector<double> tot(wg.strength);

    std::vector<double> weight_to(n, 0.0);
    std::vector<std::uint32_t> touched;
    bool any_move = false;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::uint32_t v = 0; v < n; ++v) {
            std::uint32_t home = comm[v];
            touched.clear();
            weight_to[home] = 0.0;
            touched.push_back(home);
            for (auto [u, weight] : wg.adj[v]) {
                std::uint32_t c = comm[u];
                if (weight_to[c] == 0.0 && c != home) touched.push_back(c);
                weight_to[c] += weight;
            }

            tot[home] -= wg.strength[v];
            double best_gain = weight_to[home] / w - tot[home] * wg.strength[v] / (2.0 * w * w);
            std::uint32_t best = home;
            for (std::uint32_t c : touched) {
                if (c == home) continue;
                double gain = weight_to[c] / w - tot[c] * wg.strength[v] / (2.0 * w * w);
                if (gain > best_gain + kMinGain) {
                    best_gain = gain;
                    best = c;
                }
            }
            tot[best] += wg.strength[v];
            for (std::uint32_t c : touched) weight_to[c] = 0.0;
            if (best != home) {
                comm[v] = best;
                moved = true;
                any_move = true;
            }
        }
    }

    // renumber communities densely by first appearance
    std::vector<std::uint32_t> relabel(n, std::numeric_limits<std::uint32_t>::max());
    std::uint32_t next_id = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
        if (relabel[comm[v]] == std::numeric_limits<std::uint32_t>::max()) {
            relabel[comm[v]] = next_id++;
        }
        comm[v] = relabel[comm[v]];
    }
    return {std::move(comm), any_move};
}

WeightedGraph aggregate(const WeightedGraph& wg, const std::vector<std::uint32_t>& comm) {
    std::uint32_t q = 0;
    for (std::uint32_t c : comm) q = std::max(q, c + 1);

    WeightedGraph agg;
    agg.adj.resize(q);
    agg.self_weight.assign(q, 0.0);
    agg.strength.assign(q, 0.0);
    agg.total = wg.total;

    std::vector<double> row(q, 0.0);
    std::vector<std::uint32_t> touched;
    std::vector<std::vector<std::uint32_t>> members(q);
    for (std::uint32_t v = 0; v < wg.size(); ++v) {
        agg.self_weight[comm[v]] += wg.self_weight[v];
        agg.strength[comm[v]] += wg.strength[v];
        members[comm[v]].push_back(v);
    }
    for (std::uint32_t c = 0; c < q; ++c) {
        touched.clear();
        for (std::uint32_t v : members[c]) {
            for (auto [u, weight] : wg.adj[v]) {
                std::uint32_t d = comm[u];
                if (d == c) {
                    agg.self_weight[c] += weight;  // both directions visit here
                } else {
                    if (row[d] == 0.0) touched.push_back(d);
                    row[d] += weight;
                }
            }
        }
        std::sort(touched.begin(), touched.end());
        for (std::uint32_t d : touched) {
            agg.adj[c].push_back({d, row[d]});
            row[d] = 0.0;
        }
    }
    return agg;
}

}  // namespace

LouvainResult louvain(const DirectedGraph& g) {
    require_symmetric(g, "louvain");
    const std::size_t n = g.node_count();
    if (g.edge_count() == 0) throw std::domain_error("louvain is undefined without edges");

    Partition flat(n);
    std::iota(flat.begin(), flat.end(), 0);

    WeightedGraph wg = from_graph(g);
    while (true) {
        auto [comm, improved] = local_moving(wg);
        if (!improved) break;
        for (NodeId v = 0; v < n; ++v) flat[v] = comm[flat[v]];
        if (*std::max_element(comm.begin(), comm.end()) + 1 == wg.size()) break;
        wg = aggregate(wg, comm);
    }

    // dense ids in order of first appearance by node id
    std::vector<std::uint32_t> relabel(n, std::numeric_limits<std::uint32_t>::max());
    std::uint32_t next_id = 0;
    for (NodeId v = 0; v < n; ++v) {
        if (relabel[flat[v]] == std::numeric_limits<std::uint32_t>::max()) {
            relabel[flat[v]] = next_id++;
        }
        flat[v] = relabel[flat[v]];
    }

    LouvainResult result;
    result.partition = std::move(flat);
    result.modularity = modularity(g, result.partition);
    return result;
}

PlanarFit planar_fit(const std::vector<StructurePoint>& points) {
    if (points.size() < 3) throw std::invalid_argument("planar fit needs at least 3 points");

    // normal equations for s ~ a*m + b*c + intercept
    std::array<std::array<double, 3>, 3> ata{};
    std::array<double, 3> atb{};
    for (const auto& p : points) {
        std::array<double, 3> row = {p.modularity, p.clustering, 1.0};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) ata[i][j] += row[i] * row[j];
            atb[i] += row[i] * p.seed_pct;
        }
    }

    double scale = 0.0;
    for (const auto& row : ata) {
        for (double x : row) scale = std::max(scale, std::abs(x));
    }

    // gaussian elimination with partial pivoting
    std::array<std::array<double, 4>, 3> aug{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) aug[i][j] = ata[i][j];
        aug[i][3] = atb[i];
    }
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r) {
            if (std::abs(aug[r][col]) > std::abs(aug[pivot][col])) pivot = r;
        }
        if (std::abs(aug[pivot][col]) < 1e-12 * std::max(scale, 1.0)) {
            throw DegenerateFitError("collinear design: planar fit is not unique");
        }
        std::swap(aug[col], aug[pivot]);
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            double factor = aug[r][col] / aug[col][col];
            for (int j = col; j < 4; ++j) aug[r][j] -= factor * aug[col][j];
        }
    }

    PlanarFit fit;
    fit.coef_m = aug[0][3] / aug[0][0];
    fit.coef_c = aug[1][3] / aug[1][1];
    fit.intercept = aug[2][3] / aug[2][2];

    double mean = 0.0;
    for (const auto& p : points) mean += p.seed_pct;
    mean /= static_cast<double>(points.size());
    double ss_res = 0.0;
    double ss_tot = 0.0;
    for (const auto& p : points) {
        double predicted = fit.coef_m * p.modularity + fit.coef_c * p.clustering + fit.intercept;
        ss_res += (p.seed_pct - predicted) * (p.seed_pct - predicted);
        ss_tot += (p.seed_pct - mean) * (p.seed_pct - mean);
    }
    fit.r_squared = ss_tot <= 1e-30 ? 1.0 : 1.0 - ss_res / ss_tot;
    return fit;
}

void write_partition_csv(const DirectedGraph& g, const Partition& partition, std::ostream& out) {
    out << "node,community\n";
    for (std::size_t v = 0; v < partition.size(); ++v) {
        out << g.label_or_index(static_cast<NodeId>(v)) << ',' << partition[v] << '\n';
    }
}

}  // namespace tipseed
