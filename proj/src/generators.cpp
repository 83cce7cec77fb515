#include "tipseed/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace tipseed {

std::uint64_t Rng::next_below(std::uint64_t bound) {
    // rejection sampling keeps the draw unbiased
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do {
        r = eng_();
    } while (r >= limit);
    return r % bound;
}

DirectedGraph make_cycle(std::size_t n, bool symmetric) {
    if (n < 2) throw std::invalid_argument("cycle needs at least 2 nodes");
    GraphBuilder b(symmetric);
    b.reserve_nodes(n);
    for (std::size_t i = 0; i < n; ++i) {
        b.add_edge_ids(static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % n));
    }
    return b.build();
}

DirectedGraph make_path(std::size_t n, bool symmetric) {
    if (n < 1) throw std::invalid_argument("path needs at least 1 node");
    GraphBuilder b(symmetric);
    b.reserve_nodes(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        b.add_edge_ids(static_cast<NodeId>(i), static_cast<NodeId>(i + 1));
    }
    return b.build();
}

DirectedGraph make_star(std::size_t leaves, bool symmetric) {
    GraphBuilder b(symmetric);
    b.reserve_nodes(leaves + 1);
    auto center = static_cast<NodeId>(leaves);
    for (std::size_t leaf = 0; leaf < leaves; ++leaf) {
        b.add_edge_ids(center, static_cast<NodeId>(leaf));
    }
    return b.build();
}

DirectedGraph make_clique(std::size_t n) {
    if (n < 1) throw std::invalid_argument("clique needs at least 1 node");
    GraphBuilder b(false);
    b.reserve_nodes(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) b.add_edge_ids(static_cast<NodeId>(i), static_cast<NodeId>(j));
        }
    }
    return b.build();
}

namespace {

// Draws the gap to the next success of a Bernoulli(p) sequence.
std::size_t geometric_skip(Rng& rng, double log_q, std::size_t cap) {
    double u = rng.next_unit();
    double skip = std::floor(std::log1p(-u) / log_q);
    if (!(skip >= 0.0) || skip > static_cast<double>(cap)) return cap;
    return static_cast<std::size_t>(skip);
}

}  // namespace

DirectedGraph make_uniform_random(std::size_t n, double p, std::uint64_t seed, bool symmetric) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability must be in [0, 1]");
    GraphBuilder b(symmetric);
    b.reserve_nodes(n);
    Rng rng(seed);
    if (p >= 1.0) {
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t first = symmetric ? i + 1 : 0;
            for (std::size_t j = first; j < n; ++j) {
                if (i != j) b.add_edge_ids(static_cast<NodeId>(i), static_cast<NodeId>(j));
            }
        }
        return b.build();
    }
    if (p > 0.0 && n > 1) {
        double log_q = std::log1p(-p);
        if (symmetric) {
            // pairs (i, j) with j > i
            for (std::size_t i = 0; i + 1 < n; ++i) {
                std::size_t j = i;
                while (true) {
                    j += 1 + geometric_skip(rng, log_q, n);
                    if (j >= n) break;
                    b.add_edge_ids(static_cast<NodeId>(i), static_cast<NodeId>(j));
                }
            }
        } else {
            // all ordered pairs; slot s skips the diagonal
            for (std::size_t i = 0; i < n; ++i) {
                std::size_t slot = 0;
                bool first = true;
                while (true) {
                    slot += (first ? 0 : 1) + geometric_skip(rng, log_q, n);
                    first = false;
                    if (slot >= n - 1) break;
                    std::size_t j = slot < i ? slot : slot + 1;
                    b.add_edge_ids(static_cast<NodeId>(i), static_cast<NodeId>(j));
                }
            }
        }
    }
    return b.build();
}

DirectedGraph make_preferential_attachment(std::size_t n, std::size_t edges_per_node,
                                           std::uint64_t seed) {
    if (edges_per_node < 1) throw std::invalid_argument("edges_per_node must be >= 1");
    if (n <= edges_per_node) {
        throw std::invalid_argument("preferential attachment needs n > edges_per_node");
    }
    GraphBuilder b(true);
    b.reserve_nodes(n);
    Rng rng(seed);

    std::vector<NodeId> targets;
    for (std::size_t i = 0; i < edges_per_node; ++i) targets.push_back(static_cast<NodeId>(i));
    std::vector<NodeId> endpoints;  // one entry per incident edge end

    for (std::size_t src = edges_per_node; src < n; ++src) {
        for (NodeId t : targets) {
            b.add_edge_ids(static_cast<NodeId>(src), t);
            endpoints.push_back(t);
        }
        endpoints.insert(endpoints.end(), edges_per_node, static_cast<NodeId>(src));

        std::unordered_set<NodeId> picked;
        while (picked.size() < edges_per_node) {
            picked.insert(endpoints[rng.next_below(endpoints.size())]);
        }
        targets.assign(picked.begin(), picked.end());
        std::sort(targets.begin(), targets.end());
    }
    return b.build();
}

DirectedGraph make_synthetic(const SyntheticParams& params) {
    bool symmetric = !params.directed;
    if (params.kind == "cycle") return make_cycle(params.n, symmetric);
    if (params.kind == "path") return make_path(params.n, symmetric);
    if (params.kind == "star") {
        if (params.n < 1) throw std::invalid_argument("star needs at least 1 node");
        return make_star(params.n - 1, symmetric);
    }
    if (params.kind == "clique") return make_clique(params.n);
    if (params.kind == "uniform-random") {
        return make_uniform_random(params.n, params.p, params.seed, symmetric);
    }
    if (params.kind == "preferential-attachment") {
        return make_preferential_attachment(params.n, params.edges_per_node, params.seed);
    }
    throw std::invalid_argument("unknown synthetic graph kind: " + params.kind);
}

}  // namespace tipseed
