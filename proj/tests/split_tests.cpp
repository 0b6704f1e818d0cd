// Unit tests for zero-split classification: the worked occurrence-set
// examples, validity of the returned partitions and witnesses, agreement
// between the connectivity reduction and the brute-force partition
// enumeration, and the disconnection equivalence on every affordable pair.
#include <algorithm>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "gposet/canonical.hpp"
#include "gposet/enumerate.hpp"
#include "gposet/fixtures.hpp"
#include "gposet/graph.hpp"
#include "gposet/interval.hpp"
#include "gposet/split.hpp"

using namespace gposet;

namespace {

std::uint64_t zero_set_mask(const Graph& g, const std::vector<int>& occurrence) {
    std::uint64_t mask = (g.order == 64) ? ~0ULL : ((1ULL << g.order) - 1);
    for (int v : occurrence) mask &= ~(1ULL << v);
    return mask;
}

// The defining pairwise condition: every cross pair of a claimed
// zero-split partition must have disjoint zero sets.
bool partition_is_zero_split(const Graph& g, const SplitReport& report) {
    if (!report.partition) return false;
    const auto& [a, b] = *report.partition;
    if (a.empty() || b.empty()) return false;
    for (const std::vector<int>& eta : a) {
        for (const std::vector<int>& phi : b) {
            if (zero_set_mask(g, eta) & zero_set_mask(g, phi)) return false;
        }
    }
    return true;
}

}  // namespace

TEST_SUITE_BEGIN("split");

TEST_CASE("two four-cycles sharing a vertex split but not strongly") {
    Graph g = fixtures::example_two_c4_sharing_vertex();
    Graph h = make_cycle(4);
    OccurrenceSet occ = occurrences(h, g);
    REQUIRE(occ.occurrences.size() == 2);
    SplitReport report = split_classify(h, g);
    CHECK(report.status == SplitStatus::zero_split_only);
    CHECK(partition_is_zero_split(g, report));
    REQUIRE(report.witness.has_value());
    const SplitWitness& w = *report.witness;
    CHECK(((zero_set_mask(g, w.eta) >> w.i) & 1) == 1);
    CHECK(((zero_set_mask(g, w.phi) >> w.j) & 1) == 1);
    std::vector<int> eta_ext = w.eta;
    eta_ext.push_back(w.i);
    std::sort(eta_ext.begin(), eta_ext.end());
    std::vector<int> phi_ext = w.phi;
    phi_ext.push_back(w.j);
    std::sort(phi_ext.begin(), phi_ext.end());
    CHECK(is_isomorphic(induced_subgraph(g, eta_ext), induced_subgraph(g, phi_ext)));
    Interval iv = build_interval(h, g, false);
    CHECK_FALSE(interior_disconnected(iv));
    CHECK(verify_disconnection_theorem(h, g));
}

TEST_CASE("the vertex join of a four-cycle splits strongly") {
    Graph h = make_cycle(4);
    Graph g = d_v_construction(h, 0);
    SplitReport report = split_classify(h, g);
    CHECK(report.status == SplitStatus::strongly_zero_split);
    CHECK(partition_is_zero_split(g, report));
    CHECK_FALSE(report.witness.has_value());
    CHECK(interior_disconnected(build_interval(h, g, false)));
    CHECK(verify_disconnection_theorem(h, g));
}

TEST_CASE("low-rank behaviour") {
    SplitReport tiny = split_classify(make_complete(1), make_complete(2));
    CHECK(tiny.status == SplitStatus::zero_split_only);
    CHECK(partition_is_zero_split(make_complete(2), tiny));
    CHECK_THROWS(verify_disconnection_theorem(make_complete(1), make_complete(2)));
    CHECK_THROWS(verify_disconnection_theorem(make_complete(1), make_complete(3)));
    SplitReport spread = split_classify(make_complete(1), make_path(3));
    CHECK(spread.status == SplitStatus::not_zero_split);
    CHECK_FALSE(spread.partition.has_value());
    CHECK_THROWS(split_classify(make_complete(3), make_cycle(6)));
}

TEST_CASE("reduction agrees with brute force on every small pair") {
    for (int n = 3; n <= 5; ++n) {
        for (const Graph& g : all_graphs(n)) {
            DownSet ds = build_down_set(g);
            for (const Graph& h : ds.graphs) {
                if (h.order == 0 || h.order >= g.order) continue;
                if (occurrences(h, g).occurrences.size() > 12) continue;
                SplitReport fast = split_classify(h, g);
                SplitReport slow = split_classify_bruteforce(h, g);
                CAPTURE(to_hex(canonical_form(h)));
                CAPTURE(to_hex(canonical_form(g)));
                CHECK(fast.status == slow.status);
                if (fast.status != SplitStatus::not_zero_split) {
                    CHECK(partition_is_zero_split(g, fast));
                    CHECK(partition_is_zero_split(g, slow));
                }
            }
        }
    }
}

TEST_CASE("brute force refuses oversized occurrence sets") {
    CHECK_THROWS(split_classify_bruteforce(make_complete(1), make_empty(21)));
}

TEST_CASE("disconnection equivalence holds on all pairs up to order five") {
    for (int n = 4; n <= 5; ++n) {
        for (const Graph& g : all_graphs(n)) {
            DownSet ds = build_down_set(g);
            for (const Graph& h : ds.graphs) {
                if (h.order < 1 || g.order - h.order <= 2) continue;
                CHECK(verify_disconnection_theorem(h, g));
            }
        }
    }
}

TEST_SUITE_END();
