// Zero-split classification of occurrence sets.
//
// For h <= g the occurrence set E(h,g) collects the vertex subsets of g
// inducing a copy of h. Writing Z(eta) for the complement of eta in V(g),
// a zero-split is a partition of E(h,g) into non-empty parts A, B with
// Z(A) and Z(B) disjoint; it is strong when additionally no eta in A and
// phi in B admit i in Z(eta), j in Z(phi) with g[eta+i] isomorphic to
// g[phi+j]. Strong zero-splits characterise disconnected interiors of
// intervals of rank greater than two.
//
// Both defining conditions are pairwise, so classification reduces to
// connectivity of constraint graphs on E(h,g): one with Z-intersection
// edges alone, one with extension-isomorphism edges added. The reduction
// is validated against brute-force partition enumeration in the tests.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gposet/graph.hpp"

namespace gposet {

enum class SplitStatus { not_zero_split, zero_split_only, strongly_zero_split };

// A pair of occurrences with isomorphic one-vertex extensions that crosses
// a zero-split, certifying that the split is not strong.
struct SplitWitness {
    std::vector<int> eta;
    std::vector<int> phi;
    int i = -1;  // vertex in Z(eta)
    int j = -1;  // vertex in Z(phi)
};

struct SplitReport {
    SplitStatus status = SplitStatus::not_zero_split;
    // Populated for any split status: a partition (A, B) of the occurrence
    // set with disjoint zero sets. For strongly_zero_split no cross pair
    // has isomorphic one-vertex extensions.
    std::optional<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>> partition;
    // Populated for zero_split_only.
    std::optional<SplitWitness> witness;
};

// Classifies E(h,g) via constraint-graph connectivity. Throws
// std::invalid_argument when h is not an induced subgraph of g.
SplitReport split_classify(const Graph& h, const Graph& g);

// Brute-force oracle enumerating every bipartition of E(h,g); intended for
// tests on small occurrence sets. Throws std::invalid_argument when the
// occurrence set has more than 20 elements.
SplitReport split_classify_bruteforce(const Graph& h, const Graph& g);

// True when interval interior disconnection agrees with strong zero-split
// classification. Requires |g| - |h| > 2, the regime where the two notions
// are equivalent; throws std::invalid_argument otherwise.
bool verify_disconnection_theorem(const Graph& h, const Graph& g);

}  // namespace gposet
