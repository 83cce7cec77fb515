#include "tipseed/tipping.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace tipseed {

ThresholdSpec ThresholdSpec::fraction_of_in_degree(double f) {
    if (!(f > 0.0) || f > 1.0) {
        throw std::invalid_argument("threshold fraction must lie in (0, 1]");
    }
    ThresholdSpec spec;
    spec.kind = Kind::FractionOfInDegree;
    spec.fraction = f;
    return spec;
}

ThresholdSpec ThresholdSpec::absolute_capped(std::uint32_t k) {
    if (k < 1) throw std::invalid_argument("threshold count must be >= 1");
    ThresholdSpec spec;
    spec.kind = Kind::AbsoluteCapped;
    spec.count = k;
    return spec;
}

ThresholdAssignment compute_thresholds(const DirectedGraph& g, const ThresholdSpec& spec) {
    ThresholdAssignment ka;
    ka.k.resize(g.node_count(), 0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        auto d = static_cast<std::uint32_t>(g.in_degree(v));
        if (d == 0) continue;  // nothing to wait for: activates on its own
        if (spec.kind == ThresholdSpec::Kind::FractionOfInDegree) {
            // ceil(f*d); the slack absorbs representation error in f*d, and
            // the result is clamped into the always-valid range [1, d]
            auto k = static_cast<std::int64_t>(std::ceil(spec.fraction * d - 1e-9));
            k = std::clamp<std::int64_t>(k, 1, d);
            ka.k[v] = static_cast<std::uint32_t>(k);
        } else {
            ka.k[v] = std::min(d, spec.count);
        }
    }
    return ka;
}

namespace {

SeedSet normalized(const DirectedGraph& g, const SeedSet& nodes) {
    SeedSet sorted = nodes;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (!sorted.empty() && sorted.back() >= g.node_count()) {
        throw std::invalid_argument("seed contains an unknown node id");
    }
    return sorted;
}

}  // namespace

SeedSet activate_step(const DirectedGraph& g, const ThresholdAssignment& ka,
                      const SeedSet& active) {
    const std::size_t n = g.node_count();
    if (ka.k.size() != n) throw std::invalid_argument("thresholds do not match graph");
    SeedSet base = normalized(g, active);
    std::vector<char> is_active(n, 0);
    std::vector<std::uint32_t> hits(n, 0);
    for (NodeId u : base) is_active[u] = 1;
    for (NodeId u : base) {
        for (NodeId v : g.out_neighbors(u)) ++hits[v];
    }
    SeedSet result;
    for (NodeId v = 0; v < n; ++v) {
        if (is_active[v] || hits[v] >= ka.k[v]) result.push_back(v);
    }
    return result;
}

FixpointResult activate_fixpoint(const DirectedGraph& g, const ThresholdAssignment& ka,
                                 const SeedSet& seed) {
    const std::size_t n = g.node_count();
    if (ka.k.size() != n) throw std::invalid_argument("thresholds do not match graph");
    FixpointResult result;
    SeedSet base = normalized(g, seed);

    std::vector<char> is_active(n, 0);
    std::vector<std::uint32_t> hits(n, 0);
    for (NodeId u : base) is_active[u] = 1;

    result.trace.steps.push_back(base);
    result.trace.cumulative.push_back(base.size());

    // nodes with no requirement join at the first application
    std::vector<NodeId> next;
    for (NodeId v = 0; v < n; ++v) {
        if (!is_active[v] && ka.k[v] == 0) next.push_back(v);
    }

    std::vector<NodeId> frontier = base;
    while (true) {
        for (NodeId u : frontier) {
            for (NodeId v : g.out_neighbors(u)) {
                if (is_active[v] || ka.k[v] == 0) continue;
                if (++hits[v] == ka.k[v]) next.push_back(v);
            }
        }
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        for (NodeId v : next) is_active[v] = 1;
        result.trace.cumulative.push_back(result.trace.cumulative.back() + next.size());
        result.trace.steps.push_back(next);
        frontier = std::move(next);
        next.clear();
    }

    for (NodeId v = 0; v < n; ++v) {
        if (is_active[v]) result.final_set.push_back(v);
    }
    return result;
}

bool covers(const DirectedGraph& g, const ThresholdAssignment& ka, const SeedSet& seed) {
    return activate_fixpoint(g, ka, seed).final_set.size() == g.node_count();
}

CriticalMass critical_mass_step(const ActivationTrace& trace) {
    if (trace.cumulative.empty()) {
        throw std::invalid_argument("critical_mass_step: empty trace");
    }
    CriticalMass best;
    for (std::size_t t = 1; t < trace.cumulative.size(); ++t) {
        std::size_t prev = trace.cumulative[t - 1];
        if (prev == 0) continue;
        double pct = 100.0 * static_cast<double>(trace.cumulative[t] - prev) /
                     static_cast<double>(prev);
        if (pct > best.percent) {
            best.step = t;
            best.percent = pct;
        }
    }
    return best;
}

void write_trace_csv(const ActivationTrace& trace, std::ostream& out) {
    out << "step,newly_active,cumulative\n";
    for (std::size_t t = 0; t < trace.steps.size(); ++t) {
        out << t << ',' << trace.steps[t].size() << ',' << trace.cumulative[t] << '\n';
    }
}

}  // namespace tipseed
