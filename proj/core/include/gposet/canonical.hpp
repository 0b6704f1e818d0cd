// Canonical forms, isomorphism testing, occurrence enumeration and
// vertex-transitivity detection.
//
// A CanonicalCode is the byte string [order, rows], where row k lists the
// adjacency multiplicities of vertex k to vertices 0..k (the lower triangle
// including the diagonal), minimized lexicographically over every vertex
// permutation that respects the sorted degree partition: positions are
// grouped by ascending degree, and vertices may only occupy positions of
// their own degree class. The degree multiset is an isomorphism invariant,
// so equal codes characterize isomorphic graphs.
//
// Canonicalization is exhaustive within the degree classes (branch and
// bound on the byte prefix); there is no refinement heuristic, so the code
// doubles as its own oracle. Results are memoized behind a shared-mutex
// map keyed by the labelled adjacency bytes; correctness never depends on
// the cache.

#pragma once

#include <compare>
#include <string>
#include <vector>

#include "gposet/graph.hpp"

namespace gposet {

struct CanonicalCode {
    std::string bytes;

    auto operator<=>(const CanonicalCode&) const = default;
};

std::string to_hex(const CanonicalCode& code);

// Orders above the bound are refused so a mistyped sweep cannot silently
// run for hours. The bound is process-wide and thread-safe.
int canonical_order_bound();
void set_canonical_order_bound(int bound);

CanonicalCode canonical_form(const Graph& g);
bool is_isomorphic(const Graph& g, const Graph& h);

// Decodes a canonical code back into its representative labelled graph;
// canonical_form(graph_from_code(c)) == c. Throws std::invalid_argument on
// malformed byte strings.
Graph graph_from_code(const CanonicalCode& code);

struct OccurrenceSet {
    int host_order = 0;
    std::vector<std::vector<int>> occurrences;  // sorted subsets, sorted lexicographically
};

OccurrenceSet occurrences(const Graph& h, const Graph& g);
bool contains_induced(const Graph& h, const Graph& g);

// All vertex-deleted subgraphs pairwise isomorphic; for finite graphs this
// is the usable vertex-transitivity criterion.
bool is_vertex_transitive(const Graph& g);

// Test oracles: direct backtracking over vertex bijections, independent of
// canonical codes.
bool is_isomorphic_bruteforce(const Graph& g, const Graph& h);
bool is_vertex_transitive_orbit_bruteforce(const Graph& g);

void clear_canonical_cache();

}  // namespace gposet
