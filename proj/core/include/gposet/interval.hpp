// Intervals [H,G] of the induced-subgraph poset, materialized as explicit
// Hasse diagrams with per-element Möbius values.
//
// The poset is graded by order, so covering pairs always connect
// consecutive ranks and rank(X) = |X| - |bottom|. Construction runs top
// down: each level's one-vertex-deleted subgraphs are deduplicated by
// canonical code and filtered to those still containing the bottom (and to
// connected graphs when building inside the connected subposet). Möbius
// values follow the defining recursion mu(b,b) = 1,
// mu(b,e) = -sum over z in [b,e) of mu(b,z), evaluated in rank order.
//
// All Möbius arithmetic is 64-bit with overflow checks; overflow throws
// std::overflow_error rather than wrapping.

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "gposet/canonical.hpp"
#include "gposet/graph.hpp"

namespace gposet {

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_neg(std::int64_t a);

struct IntervalElement {
    Graph representative;
    int rank = 0;
    std::int64_t mobius_from_bottom = 0;
};

struct Interval {
    CanonicalCode bottom;
    CanonicalCode top;
    std::map<CanonicalCode, IntervalElement> elements;
    std::set<std::pair<CanonicalCode, CanonicalCode>> hasse_edges;  // (lower, upper)
    bool connected_variant = false;
};

Interval build_interval(const Graph& h, const Graph& g, bool connected_variant = false);

std::int64_t mobius(const Graph& h, const Graph& g);
std::int64_t mobius_connected(const Graph& h, const Graph& g);

std::vector<int> rank_sequence(const Interval& iv);
bool is_unimodal(const std::vector<int>& seq);

std::vector<CanonicalCode> coatoms(const Interval& iv);

enum class CoatomUniqueness { not_applicable, unique, multiple };
CoatomUniqueness coatom_unique(const Interval& iv);

// Comparability components of the open interval (bottom, top): two interior
// elements are joined when comparable (reachable in the Hasse diagram).
// True when there are at least two components; empty interiors are
// connected by convention.
bool interior_disconnected(const Interval& iv);

// A disconnected subinterval only obstructs shellability at rank >= 3.
bool is_nontrivial(const Interval& iv);

}  // namespace gposet
