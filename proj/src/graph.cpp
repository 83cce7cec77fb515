#include "tipseed/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "tipseed/errors.hpp"

namespace tipseed {

bool DirectedGraph::has_edge(NodeId u, NodeId v) const {
    const auto& adj = out_adj_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

bool DirectedGraph::is_symmetric() const {
    for (NodeId u = 0; u < out_adj_.size(); ++u) {
        for (NodeId v : out_adj_[u]) {
            if (!has_edge(v, u)) return false;
        }
    }
    return true;
}

std::string DirectedGraph::label_or_index(NodeId v) const {
    if (v < labels_.size() && !labels_[v].empty()) return labels_[v];
    return std::to_string(v);
}

NodeId GraphBuilder::add_node(const std::string& label) {
    labeled_ = true;
    auto [it, inserted] = ids_.emplace(label, static_cast<NodeId>(node_count_));
    if (inserted) {
        labels_.push_back(label);
        ++node_count_;
    }
    return it->second;
}

void GraphBuilder::reserve_nodes(std::size_t n) {
    if (n > node_count_) node_count_ = n;
}

void GraphBuilder::add_edge(const std::string& from, const std::string& to) {
    NodeId u = add_node(from);
    NodeId v = add_node(to);
    add_edge_ids(u, v);
}

void GraphBuilder::add_edge_ids(NodeId from, NodeId to) {
    std::size_t needed = static_cast<std::size_t>(std::max(from, to)) + 1;
    reserve_nodes(needed);
    if (from == to) return;  // a node's own state never counts toward its threshold
    edges_.emplace_back(from, to);
}

DirectedGraph GraphBuilder::build() {
    std::vector<std::pair<NodeId, NodeId>> edges = std::move(edges_);
    edges_.clear();
    if (symmetrize_) {
        std::size_t original = edges.size();
        edges.reserve(original * 2);
        for (std::size_t i = 0; i < original; ++i) {
            edges.emplace_back(edges[i].second, edges[i].first);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    DirectedGraph g;
    g.out_adj_.resize(node_count_);
    g.in_adj_.resize(node_count_);
    for (auto [u, v] : edges) {
        g.out_adj_[u].push_back(v);
        g.in_adj_[v].push_back(u);  // u ascending: stays sorted
    }
    g.m_ = edges.size();
    if (labeled_) g.labels_ = std::move(labels_);
    return g;
}

DirectedGraph load_edge_list(std::istream& in, bool symmetrize) {
    GraphBuilder builder(symmetrize);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string from, to, extra;
        if (!(tokens >> from)) continue;  // blank line
        if (from[0] == '#') continue;
        if (!(tokens >> to)) {
            throw ParseError("expected two tokens, got one", line_no);
        }
        if (tokens >> extra) {
            throw ParseError("expected two tokens, got more", line_no);
        }
        builder.add_edge(from, to);
    }
    return builder.build();
}

DirectedGraph load_edge_list_file(const std::string& path, bool symmetrize) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return load_edge_list(in, symmetrize);
}

void write_edge_list(const DirectedGraph& g, std::ostream& out) {
    for (NodeId u = 0; u < g.node_count(); ++u) {
        for (NodeId v : g.out_neighbors(u)) {
            out << g.label_or_index(u) << ' ' << g.label_or_index(v) << '\n';
        }
    }
}

InducedSubgraph remove_nodes(const DirectedGraph& g, const std::vector<NodeId>& victims) {
    const std::size_t n = g.node_count();
    std::vector<char> doomed(n, 0);
    for (NodeId v : victims) {
        if (v >= n) throw std::invalid_argument("remove_nodes: unknown node id");
        doomed[v] = 1;
    }

    InducedSubgraph result;
    std::vector<NodeId> new_id(n, 0);
    for (NodeId v = 0; v < n; ++v) {
        if (!doomed[v]) {
            new_id[v] = static_cast<NodeId>(result.kept.size());
            result.kept.push_back(v);
        }
    }

    GraphBuilder builder(false);
    if (g.labels().empty()) {
        builder.reserve_nodes(result.kept.size());
    } else {
        for (NodeId old : result.kept) builder.add_node(g.labels()[old]);
    }
    for (NodeId u = 0; u < n; ++u) {
        if (doomed[u]) continue;
        for (NodeId v : g.out_neighbors(u)) {
            if (!doomed[v]) builder.add_edge_ids(new_id[u], new_id[v]);
        }
    }
    result.graph = builder.build();
    return result;
}

}  // namespace tipseed
