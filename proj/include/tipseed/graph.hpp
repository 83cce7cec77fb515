#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tipseed {

using NodeId = std::uint32_t;

// Immutable directed graph over dense ids 0..n-1.
//
// Adjacency lists are sorted ascending and deduplicated, self-loops are
// excluded, and u->v appears in out_neighbors(u) iff it appears in
// in_neighbors(v). Safe to share across concurrent readers.
class DirectedGraph {
public:
    DirectedGraph() = default;

    std::size_t node_count() const { return out_adj_.size(); }
    std::size_t edge_count() const { return m_; }

    const std::vector<NodeId>& out_neighbors(NodeId u) const { return out_adj_[u]; }
    const std::vector<NodeId>& in_neighbors(NodeId v) const { return in_adj_[v]; }

    std::size_t out_degree(NodeId u) const { return out_adj_[u].size(); }
    std::size_t in_degree(NodeId v) const { return in_adj_[v].size(); }
    std::size_t total_degree(NodeId v) const { return in_degree(v) + out_degree(v); }

    bool has_edge(NodeId u, NodeId v) const;

    // True iff every edge u->v is matched by v->u.
    bool is_symmetric() const;

    // Original string ids; empty for generated graphs.
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label_or_index(NodeId v) const;

private:
    friend class GraphBuilder;
    std::size_t m_ = 0;
    std::vector<std::vector<NodeId>> out_adj_;
    std::vector<std::vector<NodeId>> in_adj_;
    std::vector<std::string> labels_;
};

// Stages edges, assigns dense ids in first-appearance order, then builds a
// normalized DirectedGraph (sorted adjacency, duplicates merged, self-loops
// dropped, optional symmetrization). Single-owner, not shareable.
class GraphBuilder {
public:
    explicit GraphBuilder(bool symmetrize = false) : symmetrize_(symmetrize) {}

    NodeId add_node(const std::string& label);
    void reserve_nodes(std::size_t n);  // materializes ids 0..n-1, unlabeled

    void add_edge(const std::string& from, const std::string& to);
    void add_edge_ids(NodeId from, NodeId to);

    std::size_t node_count() const { return node_count_; }

    DirectedGraph build();

private:
    bool symmetrize_;
    std::size_t node_count_ = 0;
    bool labeled_ = false;
    std::unordered_map<std::string, NodeId> ids_;
    std::vector<std::string> labels_;
    std::vector<std::pair<NodeId, NodeId>> edges_;
};

// Reads "source target" pairs, one per line. Lines whose first token starts
// with '#' are comments; blank lines are skipped. Any other line must hold
// exactly two whitespace-separated tokens, otherwise ParseError. Nodes are
// materialized in first-appearance order; empty input gives an empty graph.
DirectedGraph load_edge_list(std::istream& in, bool symmetrize);
DirectedGraph load_edge_list_file(const std::string& path, bool symmetrize);

void write_edge_list(const DirectedGraph& g, std::ostream& out);

struct InducedSubgraph {
    DirectedGraph graph;
    std::vector<NodeId> kept;  // new id -> old id, ascending
};

// Induced subgraph on V minus victims, densely re-indexed.
InducedSubgraph remove_nodes(const DirectedGraph& g, const std::vector<NodeId>& victims);

}  // namespace tipseed
