#include "tipseed/exact.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "tipseed/errors.hpp"

namespace tipseed {

namespace {

// Visits node subsets in (cardinality, lexicographic) order until accept
// returns true; the first hit is therefore a minimum-size, lexicographically
// smallest solution.
template <typename Accept>
SeedSet first_accepted_subset(std::size_t n, const Accept& accept) {
    SeedSet subset;
    for (std::size_t size = 0; size <= n; ++size) {
        subset.resize(size);
        for (std::size_t i = 0; i < size; ++i) subset[i] = static_cast<NodeId>(i);
        bool more = true;
        while (more) {
            if (accept(subset)) return subset;
            more = false;
            for (std::size_t i = size; i-- > 0;) {
                if (subset[i] + (size - i) < n) {
                    ++subset[i];
                    for (std::size_t j = i + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
                    more = true;
                    break;
                }
            }
        }
    }
    // the full set always activates everything, so this is unreachable for
    // accept = covers; keep a defined fallback for other predicates
    SeedSet all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<NodeId>(i);
    return all;
}

}  // namespace

SeedSet min_seed_bruteforce(const DirectedGraph& g, const ThresholdAssignment& ka,
                            std::size_t node_limit) {
    const std::size_t n = g.node_count();
    if (n > node_limit) throw SizeLimitError("min_seed_bruteforce", n, node_limit);
    return first_accepted_subset(n, [&](const SeedSet& s) { return covers(g, ka, s); });
}

namespace {

std::vector<double> effective_thetas(const DirectedGraph& g, const ThresholdSpec& spec) {
    ThresholdAssignment ka = compute_thresholds(g, spec);
    std::vector<double> theta(g.node_count(), 0.0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        auto d = static_cast<double>(g.in_degree(v));
        if (d == 0.0) continue;
        theta[v] = spec.kind == ThresholdSpec::Kind::FractionOfInDegree
                       ? spec.fraction
                       : static_cast<double>(ka.k[v]) / d;
    }
    return theta;
}

}  // namespace

IpModel build_seed_ip(const DirectedGraph& g, const ThresholdSpec& spec) {
    IpModel model;
    const std::size_t n = g.node_count();
    model.n = n;
    if (n == 0) return model;

    model.theta = effective_thetas(g, spec);

    model.end_rows.resize(n);
    for (NodeId v = 0; v < n; ++v) model.end_rows[v] = v;

    // one row per node per step t in 2..n; a node with no in-edges keeps its
    // row as the vacuous x_i_t <= 1 so it may activate freely
    model.activation_rows.reserve(n * (n - 1));
    for (NodeId v = 0; v < n; ++v) {
        const bool free = g.in_degree(v) == 0;
        for (std::uint32_t t = 2; t <= n; ++t) {
            IpModel::ActivationRow row;
            row.node = v;
            row.t = t;
            row.free_activation = free;
            if (!free) {
                row.coefficient = 1.0 / (static_cast<double>(g.in_degree(v)) * model.theta[v]);
                row.in_neighbors = g.in_neighbors(v);
            }
            model.activation_rows.push_back(std::move(row));
        }
    }
    return model;
}

namespace {

std::string coefficient_text(double c) {
    char buf[64];
    if (c == std::floor(c) && std::abs(c) < 1e15) {
        std::snprintf(buf, sizeof(buf), "%" PRId64, static_cast<std::int64_t>(c));
    } else {
        std::snprintf(buf, sizeof(buf), "%.12g", c);
    }
    return buf;
}

std::string var_name(NodeId node, std::uint32_t t) {
    return "x_" + std::to_string(node + 1) + "_" + std::to_string(t);
}

}  // namespace

void export_lp(const IpModel& model, std::ostream& out) {
    const std::size_t n = model.n;
    out << "Minimize\n obj:";
    if (n == 0) {
        out << " 0";
    } else {
        for (NodeId v = 0; v < n; ++v) {
            out << (v == 0 ? " " : " + ") << var_name(v, 1);
        }
    }
    out << "\nSubject To\n";
    for (NodeId v : model.end_rows) {
        out << " end_" << (v + 1) << ": " << var_name(v, static_cast<std::uint32_t>(n))
            << " = 1\n";
    }
    for (const auto& row : model.activation_rows) {
        out << " act_" << (row.node + 1) << '_' << row.t << ": " << var_name(row.node, row.t);
        if (row.free_activation) {
            out << " <= 1\n";
            continue;
        }
        out << " - " << var_name(row.node, row.t - 1);
        for (NodeId j : row.in_neighbors) {
            out << " - ";
            if (row.coefficient != 1.0) out << coefficient_text(row.coefficient) << ' ';
            out << var_name(j, row.t - 1);
        }
        out << " <= 0\n";
    }
    out << "Binary\n";
    for (NodeId v = 0; v < n; ++v) {
        for (std::uint32_t t = 1; t <= n; ++t) out << ' ' << var_name(v, t) << '\n';
    }
    out << "End\n";
}

SeedSet solve_seed_ip_small(const DirectedGraph& g, const ThresholdSpec& spec,
                            std::size_t node_limit) {
    const std::size_t n = g.node_count();
    if (n > node_limit) throw SizeLimitError("solve_seed_ip_small", n, node_limit);
    if (n == 0) return {};

    std::vector<double> theta = effective_thetas(g, spec);
    std::vector<double> inv_coef(n, 0.0);
    std::vector<char> free_activation(n, 0);
    for (NodeId v = 0; v < n; ++v) {
        if (g.in_degree(v) == 0) {
            free_activation[v] = 1;
        } else {
            inv_coef[v] = 1.0 / (static_cast<double>(g.in_degree(v)) * theta[v]);
        }
    }

    // maximal trajectory through the activation rows, accepted when every
    // node is active at the final step
    auto accepted = [&](const SeedSet& seed) {
        std::vector<char> x(n, 0);
        for (NodeId v : seed) x[v] = 1;
        std::vector<char> next(n, 0);
        for (std::size_t t = 2; t <= n; ++t) {
            for (NodeId v = 0; v < n; ++v) {
                if (x[v] || free_activation[v]) {
                    next[v] = 1;
                    continue;
                }
                double sum = 0.0;
                for (NodeId j : g.in_neighbors(v)) sum += x[j];
                next[v] = inv_coef[v] * sum >= 1.0 - 1e-9 ? 1 : 0;
            }
            x = next;
        }
        for (NodeId v = 0; v < n; ++v) {
            if (!x[v]) return false;
        }
        return true;
    };
    return first_accepted_subset(n, accepted);
}

}  // namespace tipseed
