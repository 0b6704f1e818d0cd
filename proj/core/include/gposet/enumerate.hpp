// Exhaustive generation of small graphs up to isomorphism, and down-sets
// of a fixed top graph under induced-subgraph containment.
//
// all_graphs produces one canonical representative per isomorphism class
// by single-vertex extension with canonical-code deduplication. A DownSet
// materializes every class below a top graph together with Hasse covers,
// the full comparability closure, and the Mobius values mu(x, top), all
// from a single top-down sweep; it is the workhorse behind interval
// censuses, where one dual Mobius pass per top replaces one interval
// construction per (bottom, top) pair.

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gposet/canonical.hpp"
#include "gposet/graph.hpp"

namespace gposet {

// All isomorphism classes of simple graphs with exactly the given order,
// sorted by canonical code. With connected_only, restricted to connected
// classes (empty for order 0).
std::vector<Graph> all_graphs(int order, bool connected_only = false);

struct DownSet {
    // Indexed in (order, canonical code) lexicographic order; the null
    // graph sits at index 0 except in the connected variant, which stops
    // at single vertices.
    std::vector<Graph> graphs;
    std::vector<CanonicalCode> codes;
    std::vector<std::vector<int>> covers_down;
    std::vector<std::vector<int>> covers_up;
    // Bit y of row x is set when x <= y.
    std::vector<std::vector<std::uint64_t>> above;
    std::vector<std::int64_t> mobius_to_top;  // mu(element, top)
    std::map<CanonicalCode, int> index_of;
    int top_index = -1;
    bool connected_variant = false;

    bool leq(int x, int y) const { return (above[x][static_cast<std::size_t>(y) / 64] >> (y % 64)) & 1; }
};

// Materializes the down-set of top. The connected variant restricts every
// level to connected graphs and requires a connected top.
DownSet build_down_set(const Graph& top, bool connected_variant = false);

}  // namespace gposet
