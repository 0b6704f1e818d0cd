// The poset of disjoint unions of paths, handled as multisets of path
// lengths. Unions of paths form a lower set of the graph order: every
// induced subgraph of a union of paths is again one, so intervals below a
// union of paths live entirely inside this subposet and Mobius values
// agree with the full graph poset. Containment is a packing condition
// (each part maps into a host part, distinct parts sharing a host part
// pay one separator vertex), and covers are single vertex deletions,
// splitting one part u into (w1, w2) with w1 + w2 = u - 1 and zero parts
// dropped.
//
// Everything here is pure integer arithmetic, so the module scales past
// the canonical-form order bound; it is the engine behind the path-table
// computations and the independent oracle for the discrete Morse code.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gposet/graph.hpp"

namespace gposet {

struct PathMultiset {
    std::vector<int> parts;  // weakly decreasing, all parts >= 1

    // Sorts and validates; throws std::invalid_argument on parts < 1.
    static PathMultiset of(std::vector<int> parts);
    int total() const;
    bool empty() const { return parts.empty(); }
    // Multiplicity of u among the parts.
    int count(int u) const;

    auto operator<=>(const PathMultiset&) const = default;

    std::string to_string() const;  // "{5,3,1}"; "{}" when empty
};

Graph to_graph(const PathMultiset& m);

// Path-union recognition: the multiset of component orders when every
// component of g is a path; no value when g is not simple or has a
// component that is not a path.
std::optional<PathMultiset> multiset_from_graph(const Graph& g);

// True when sub <= host: the parts of sub can be packed into the parts of
// host, parts sharing a host part separated by one unused vertex each.
bool packing_contains(const PathMultiset& sub, const PathMultiset& host);

// Distinct multisets obtained from m by deleting one vertex; sorted.
std::vector<PathMultiset> covers_below(const PathMultiset& m);

struct PathDownSet {
    // Indexed in (total, parts) lexicographic order; the empty multiset
    // sits at index 0.
    std::vector<PathMultiset> elements;
    std::vector<std::vector<int>> covers_down;
    std::vector<std::vector<int>> covers_up;
    // Bit y of row x is set when x <= y.
    std::vector<std::vector<std::uint64_t>> above;
    std::vector<std::int64_t> mobius_to_top;  // mu(element, top)
    std::map<PathMultiset, int> index_of;
    int top_index = -1;

    bool leq(int x, int y) const { return (above[x][static_cast<std::size_t>(y) / 64] >> (y % 64)) & 1; }
};

PathDownSet build_path_down_set(const PathMultiset& top);

// mu(bottom, top) in the path poset; 0 when bottom is not below top.
std::int64_t path_mobius(const PathMultiset& bottom, const PathMultiset& top);

}  // namespace gposet
