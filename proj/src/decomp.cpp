#include "tipseed/decomp.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace tipseed {

IndexedMinHeap::IndexedMinHeap(std::size_t capacity) : pos_(capacity, -1), key_(capacity, 0) {
    heap_.reserve(capacity);
}

bool IndexedMinHeap::precedes(NodeId a, NodeId b) const {
    if (key_[a] != key_[b]) return key_[a] < key_[b];
    return a < b;
}

void IndexedMinHeap::place(std::size_t i, NodeId id) {
    heap_[i] = id;
    pos_[id] = static_cast<std::int64_t>(i);
}

void IndexedMinHeap::sift_up(std::size_t i) {
    NodeId id = heap_[i];
    while (i > 0) {
        std::size_t parent = (i - 1) / 2;
        if (!precedes(id, heap_[parent])) break;
        place(i, heap_[parent]);
        i = parent;
    }
    place(i, id);
}

void IndexedMinHeap::sift_down(std::size_t i) {
    NodeId id = heap_[i];
    const std::size_t count = heap_.size();
    while (true) {
        std::size_t child = 2 * i + 1;
        if (child >= count) break;
        if (child + 1 < count && precedes(heap_[child + 1], heap_[child])) ++child;
        if (!precedes(heap_[child], id)) break;
        place(i, heap_[child]);
        i = child;
    }
    place(i, id);
}

void IndexedMinHeap::push(NodeId id, std::uint64_t key) {
    assert(!contains(id));
    key_[id] = key;
    heap_.push_back(id);
    pos_[id] = static_cast<std::int64_t>(heap_.size() - 1);
    sift_up(heap_.size() - 1);
}

std::pair<NodeId, std::uint64_t> IndexedMinHeap::pop_min() {
    if (heap_.empty()) throw std::logic_error("pop_min on empty heap");
    NodeId id = heap_[0];
    remove_at(0);
    return {id, key_[id]};
}

void IndexedMinHeap::decrease_key(NodeId id, std::uint64_t key) {
    assert(contains(id) && key <= key_[id]);
    key_[id] = key;
    sift_up(static_cast<std::size_t>(pos_[id]));
}

void IndexedMinHeap::erase(NodeId id) {
    if (!contains(id)) throw std::logic_error("erase of absent heap entry");
    remove_at(static_cast<std::size_t>(pos_[id]));
}

void IndexedMinHeap::remove_at(std::size_t i) {
    NodeId removed = heap_[i];
    NodeId last = heap_.back();
    heap_.pop_back();
    pos_[removed] = -1;
    if (i < heap_.size()) {
        place(i, last);
        sift_down(i);
        sift_up(static_cast<std::size_t>(pos_[last]));
    }
    (void)removed;
}

DecompResult tip_decomp(const DirectedGraph& g, const ThresholdAssignment& ka) {
    const std::size_t n = g.node_count();
    if (ka.k.size() != n) throw std::invalid_argument("thresholds do not match graph");

    DecompResult result;
    result.final_dist.resize(n, 0);
    IndexedMinHeap queue(n);
    for (NodeId v = 0; v < n; ++v) {
        if (ka.k[v] > g.in_degree(v)) {
            throw std::invalid_argument("threshold exceeds in-degree");
        }
        auto slack = static_cast<std::uint64_t>(g.in_degree(v) - ka.k[v]);
        queue.push(v, slack);
        ++result.stats.inserts;
    }

    while (!queue.empty()) {
        auto [v, slack] = queue.pop_min();
        ++result.stats.extract_mins;
        result.removal_order.push_back(v);
        result.final_dist[v] = static_cast<std::int64_t>(slack);
        for (NodeId j : g.out_neighbors(v)) {
            if (!queue.contains(j)) continue;  // already removed or frozen
            std::uint64_t kj = queue.key_of(j);
            if (kj > 0) {
                queue.decrease_key(j, kj - 1);
                ++result.stats.decrease_keys;
            } else {
                queue.erase(j);
                ++result.stats.freezes;
                result.seed.push_back(j);
                result.final_dist[j] = kFrozenDist;
            }
        }
    }
    std::sort(result.seed.begin(), result.seed.end());
    return result;
}

bool verify_decomposition(const DirectedGraph& g, const ThresholdAssignment& ka,
                          const DecompResult& result) {
    const std::size_t n = g.node_count();
    if (ka.k.size() != n) throw std::invalid_argument("thresholds do not match graph");

    // rank in removal order; seed nodes outlive every removal
    const std::size_t kSurvivor = n + 1;
    std::vector<std::size_t> rank(n, n + 2);
    std::vector<char> seen(n, 0);
    for (std::size_t i = 0; i < result.removal_order.size(); ++i) {
        NodeId v = result.removal_order[i];
        if (v >= n) throw std::invalid_argument("removal order names an unknown node id");
        if (seen[v]) return false;
        seen[v] = 1;
        rank[v] = i;
    }
    for (NodeId v : result.seed) {
        if (v >= n) throw std::invalid_argument("seed names an unknown node id");
        if (seen[v]) return false;
        seen[v] = 1;
        rank[v] = kSurvivor;
    }
    if (result.seed.size() + result.removal_order.size() != n) return false;

    for (std::size_t i = 0; i < result.removal_order.size(); ++i) {
        NodeId v = result.removal_order[i];
        std::size_t later = 0;
        for (NodeId u : g.in_neighbors(v)) {
            if (rank[u] > i) ++later;
        }
        if (later < ka.k[v]) return false;
    }
    return true;
}

void write_decomp_json(const DirectedGraph& g, const DecompResult& result, std::ostream& out) {
    nlohmann::json doc;
    doc["n"] = g.node_count();
    doc["m"] = g.edge_count();
    doc["seed"] = result.seed;
    doc["seed_size"] = result.seed.size();
    doc["removal_order"] = result.removal_order;
    if (!g.labels().empty()) {
        std::vector<std::string> names;
        names.reserve(result.seed.size());
        for (NodeId v : result.seed) names.push_back(g.label_or_index(v));
        doc["seed_labels"] = names;
    }
    out << doc.dump(2) << '\n';
}

}  // namespace tipseed
