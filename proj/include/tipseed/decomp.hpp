#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <utility>
#include <vector>

#include "tipseed/tipping.hpp"

namespace tipseed {

// Binary min-heap with an id->position index, supporting decrease-key and
// erase-by-id. Entries are ordered by (key, id), so extract-min breaks key
// ties toward the smallest id.
class IndexedMinHeap {
public:
    explicit IndexedMinHeap(std::size_t capacity);

    bool contains(NodeId id) const { return pos_[id] >= 0; }
    std::uint64_t key_of(NodeId id) const { return key_[id]; }
    std::size_t size() const { return heap_.size(); }
    bool empty() const { return heap_.empty(); }

    void push(NodeId id, std::uint64_t key);
    std::pair<NodeId, std::uint64_t> pop_min();
    void decrease_key(NodeId id, std::uint64_t key);  // key must not increase
    void erase(NodeId id);

private:
    bool precedes(NodeId a, NodeId b) const;
    void sift_up(std::size_t i);
    void sift_down(std::size_t i);
    void place(std::size_t i, NodeId id);
    void remove_at(std::size_t i);

    std::vector<NodeId> heap_;
    std::vector<std::int64_t> pos_;  // -1 when absent
    std::vector<std::uint64_t> key_;
};

// Slack snapshot marker: a node whose slack was exhausted (the seed).
inline constexpr std::int64_t kFrozenDist = std::numeric_limits<std::int64_t>::max();

struct DecompStats {
    std::size_t inserts = 0;
    std::size_t extract_mins = 0;
    std::size_t decrease_keys = 0;
    std::size_t freezes = 0;
};

struct DecompResult {
    SeedSet seed;                        // frozen nodes, sorted
    std::vector<NodeId> removal_order;   // first removed first
    std::vector<std::int64_t> final_dist;  // slack at removal time; kFrozenDist for seed nodes
    DecompStats stats;
};

// Shell-style decomposition: each node starts with slack d_in(i) - k(i);
// repeatedly remove the minimum-slack node (ties to the smallest id) and
// decrement the slack of its surviving out-neighbors, freezing any neighbor
// already at zero. Frozen nodes form the returned seed, which is guaranteed
// to activate the whole graph. O(m log n).
DecompResult tip_decomp(const DirectedGraph& g, const ThresholdAssignment& ka);

// Inductive certificate: every removed node must have at least k(v)
// in-neighbors among the seed and the nodes removed after it. Unknown ids
// throw invalid_argument; a violated certificate returns false.
bool verify_decomposition(const DirectedGraph& g, const ThresholdAssignment& ka,
                          const DecompResult& result);

void write_decomp_json(const DirectedGraph& g, const DecompResult& result, std::ostream& out);

}  // namespace tipseed
