// Embedded expected values for the regression suites: the equal-paths
// Mobius table, the two worked interval diagrams, the 9x9 size-1-MSI
// verdict matrix, the worked zero-split example graph, the sign-anomaly
// graph, and the published zero-proportion percentages. These are pinned
// reference data; every consumer recomputes the quantities independently
// and diffs against them.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gposet/graph.hpp"
#include "gposet/path_multiset.hpp"

namespace gposet::fixtures {

// mu(n K_1, n copies of P_x) for every filled cell with n + x <= 10,
// keyed by (n, x).
const std::map<std::pair<int, int>, std::int64_t>& equal_paths_table();

// mu(2K_1, X) for every element X of the interval [2K_1, {4,4}], keyed
// by path multiset; 22 entries.
const std::map<PathMultiset, std::int64_t>& two_p4_interval_mobius();

// mu(K_1, X) for every element X of the interval [K_1, house]; 10
// entries as (graph, mu) pairs.
std::vector<std::pair<Graph, std::int64_t>> house_interval_mobius();

// Whether consecutive operations (row = first, column = second, indices
// in the fixed operation order) admit a size-1 MSI.
const std::array<std::array<bool, 9>, 9>& size1_msi_table();

// Two 4-cycles sharing one vertex: the worked example whose occurrence
// set is zero-split but not strongly zero-split.
Graph example_two_c4_sharing_vertex();

// The 7-vertex graph with mu(2K_1, G) = +1 at rank 5, breaking sign
// alternation.
Graph sign_anomaly_graph();

// Published zero-Mobius proportions (percent) for simple-graph interval
// censuses with |G| <= 4, 5, 6, 7.
const std::array<double, 4>& zero_proportion_percent();

}  // namespace gposet::fixtures
