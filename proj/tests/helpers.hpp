// Shared oracle utilities for the unit tests. Everything here is written
// against the definitions rather than the library internals: partition and
// multiset generators, random graph sampling, and an independent chain
// walker for the operation engine built directly on covers_below so that
// the engine's own search never validates itself.
#pragma once

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gposet/graph.hpp"
#include "gposet/morse.hpp"
#include "gposet/path_multiset.hpp"

namespace testutil {

inline void partitions_into(int total, int max_part, std::vector<int>& prefix,
                            std::vector<std::vector<int>>& out) {
    if (total == 0) {
        out.push_back(prefix);
        return;
    }
    for (int part = std::min(total, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_into(total - part, part, prefix, out);
        prefix.pop_back();
    }
}

inline std::vector<gposet::PathMultiset> partitions_of(int total, int max_part) {
    std::vector<std::vector<int>> raw;
    std::vector<int> prefix;
    partitions_into(total, max_part, prefix, raw);
    std::vector<gposet::PathMultiset> out;
    out.reserve(raw.size());
    for (const std::vector<int>& parts : raw) out.push_back(gposet::PathMultiset::of(parts));
    return out;
}

// Every path multiset with total size in [0, max_total], the empty multiset
// included, parts capped at max_part.
inline std::vector<gposet::PathMultiset> multisets_up_to(int max_total, int max_part = 1 << 20) {
    std::vector<gposet::PathMultiset> out{gposet::PathMultiset{}};
    for (int total = 1; total <= max_total; ++total) {
        std::vector<gposet::PathMultiset> level = partitions_of(total, std::min(total, max_part));
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

inline gposet::Graph relabelled(const gposet::Graph& g, const std::vector<int>& perm) {
    gposet::Graph out = gposet::Graph::with_order(g.order);
    for (int i = 0; i < g.order; ++i)
        for (int j = 0; j < g.order; ++j) out.adj[perm[i]][perm[j]] = g.adj[i][j];
    return out;
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

inline gposet::Graph random_graph(std::mt19937& rng, int order, double edge_probability) {
    std::bernoulli_distribution coin(edge_probability);
    gposet::Graph g = gposet::Graph::with_order(order);
    for (int i = 0; i < order; ++i)
        for (int j = i + 1; j < order; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

// Recovers which of the nine operations realises a given cover step.
inline gposet::Operation operation_between(const gposet::PathMultiset& from,
                                           const gposet::PathMultiset& to) {
    for (const gposet::Operation& op : gposet::all_operations()) {
        if (from.count(op.domain_u) == 0) continue;
        if (gposet::apply_operation(from, op) == to) return op;
    }
    throw std::logic_error("operation_between: arguments are not a cover step");
}

inline void op_paths_rec(const gposet::PathMultiset& from, const gposet::PathMultiset& to,
                         std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
    if (from == to) {
        out.push_back(prefix);
        return;
    }
    for (const gposet::PathMultiset& child : gposet::covers_below(from)) {
        if (!gposet::packing_contains(to, child)) continue;
        prefix.push_back(gposet::operation_index(operation_between(from, child)));
        op_paths_rec(child, to, prefix, out);
        prefix.pop_back();
    }
}

// Every descending operation-index sequence from one multiset down to
// another, walking covers_below directly.
inline std::vector<std::vector<int>> all_op_paths(const gposet::PathMultiset& from,
                                                  const gposet::PathMultiset& to) {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    op_paths_rec(from, to, prefix, out);
    return out;
}

inline void chains_rec(const gposet::PathMultiset& at, const gposet::PathMultiset& bottom,
                       gposet::OperationChain& chain, std::vector<gposet::OperationChain>& out) {
    if (at == bottom) {
        out.push_back(chain);
        return;
    }
    for (const gposet::PathMultiset& child : gposet::covers_below(at)) {
        if (!gposet::packing_contains(bottom, child)) continue;
        chain.states.push_back(child);
        chain.ops.push_back(operation_between(at, child));
        chains_rec(child, bottom, chain, out);
        chain.states.pop_back();
        chain.ops.pop_back();
    }
}

// Every maximal chain of [bottom, top], larger end first, independent of
// the engine's depth-first search.
inline std::vector<gposet::OperationChain> chains_between(const gposet::PathMultiset& top,
                                                          const gposet::PathMultiset& bottom) {
    std::vector<gposet::OperationChain> out;
    gposet::OperationChain chain;
    chain.states.push_back(top);
    chains_rec(top, bottom, chain, out);
    return out;
}

inline std::vector<int> op_indices(const gposet::OperationChain& chain, int from, int to) {
    std::vector<int> out;
    for (int t = from; t < to; ++t) out.push_back(gposet::operation_index(chain.ops[t]));
    return out;
}

// Minimal skipped intervals straight from the definition: a segment
// (j, k) is skipped when its operation word is not the lexicographically
// least word between its endpoints, and only inclusion-minimal skipped
// segments are kept.
inline std::vector<std::pair<int, int>> bruteforce_minimal_skipped(
    const gposet::OperationChain& chain) {
    const int length = chain.rank();
    std::vector<std::pair<int, int>> skipped;
    for (int j = 0; j + 2 <= length; ++j) {
        for (int k = j + 2; k <= length; ++k) {
            std::vector<int> actual = op_indices(chain, j, k);
            std::vector<std::vector<int>> paths = all_op_paths(chain.states[j], chain.states[k]);
            const std::vector<int>& best = *std::min_element(paths.begin(), paths.end());
            if (actual != best) skipped.emplace_back(j, k);
        }
    }
    std::vector<std::pair<int, int>> minimal;
    for (const std::pair<int, int>& cand : skipped) {
        bool contains_other = false;
        for (const std::pair<int, int>& other : skipped) {
            if (other == cand) continue;
            if (other.first >= cand.first && other.second <= cand.second) {
                contains_other = true;
                break;
            }
        }
        if (!contains_other) minimal.push_back(cand);
    }
    return minimal;
}

}  // namespace testutil
