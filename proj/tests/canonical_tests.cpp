// Unit tests for canonical codes, isomorphism, occurrence enumeration and
// vertex-transitivity. The exhaustive backtracking oracles double-check
// the degree-class canonicalization wherever both are affordable.
#include <random>
#include <vector>

#include "doctest.h"
#include "gposet/canonical.hpp"
#include "gposet/enumerate.hpp"
#include "gposet/graph.hpp"
#include "helpers.hpp"

using namespace gposet;

TEST_SUITE_BEGIN("canonical");

TEST_CASE("canonical codes are relabelling invariants") {
    SUBCASE("random simple graphs") {
        std::mt19937 rng(20231);
        for (int trial = 0; trial < 150; ++trial) {
            int order = 1 + static_cast<int>(rng() % 8);
            double p = (trial % 3 == 0) ? 0.2 : (trial % 3 == 1 ? 0.5 : 0.8);
            Graph g = testutil::random_graph(rng, order, p);
            Graph h = testutil::relabelled(g, testutil::random_permutation(rng, order));
            CHECK(canonical_form(g) == canonical_form(h));
        }
    }
    SUBCASE("random multigraphs with loops") {
        std::mt19937 rng(777);
        for (int trial = 0; trial < 60; ++trial) {
            int order = 1 + static_cast<int>(rng() % 6);
            Graph g = Graph::with_order(order);
            for (int i = 0; i < order; ++i)
                for (int j = i; j < order; ++j)
                    if (int m = static_cast<int>(rng() % 3); m > 0) g.add_edge(i, j, m);
            Graph h = testutil::relabelled(g, testutil::random_permutation(rng, order));
            CHECK(canonical_form(g) == canonical_form(h));
        }
    }
    SUBCASE("codes separate non-isomorphic graphs of equal order") {
        CHECK(canonical_form(make_path(4)) != canonical_form(make_cycle(4)));
        Graph single = Graph::with_order(2);
        single.add_edge(0, 1);
        Graph twice = Graph::with_order(2);
        twice.add_edge(0, 1, 2);
        CHECK(canonical_form(single) != canonical_form(twice));
    }
}

TEST_CASE("codes decode back to representatives") {
    for (int n = 0; n <= 5; ++n) {
        for (const Graph& g : all_graphs(n)) {
            CanonicalCode code = canonical_form(g);
            Graph rep = graph_from_code(code);
            CHECK(rep.order == g.order);
            CHECK(canonical_form(rep) == code);
        }
    }
    CHECK_THROWS(graph_from_code(CanonicalCode{"zz"}));
    CHECK_THROWS(graph_from_code(CanonicalCode{""}));
    CHECK(to_hex(canonical_form(make_path(3))).size() == 14);
}

TEST_CASE("isomorphism agrees with the backtracking oracle") {
    std::vector<Graph> graphs = all_graphs(5);
    for (std::size_t a = 0; a < graphs.size(); ++a) {
        for (std::size_t b = a; b < graphs.size(); ++b) {
            CHECK(is_isomorphic(graphs[a], graphs[b]) ==
                  is_isomorphic_bruteforce(graphs[a], graphs[b]));
        }
    }
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = testutil::random_graph(rng, 7, 0.5);
        Graph h = testutil::relabelled(g, testutil::random_permutation(rng, 7));
        CHECK(is_isomorphic(g, h));
        CHECK(is_isomorphic_bruteforce(g, h));
    }
}

TEST_CASE("occurrence enumeration") {
    SUBCASE("edges of a path") {
        OccurrenceSet occ = occurrences(make_complete(2), make_path(4));
        CHECK(occ.host_order == 4);
        std::vector<std::vector<int>> expected{{0, 1}, {1, 2}, {2, 3}};
        CHECK(occ.occurrences == expected);
    }
    SUBCASE("subpaths of a cycle") {
        OccurrenceSet occ = occurrences(make_path(3), make_cycle(4));
        CHECK(occ.occurrences.size() == 4);
        for (const std::vector<int>& s : occ.occurrences) {
            Graph sub = induced_subgraph(make_cycle(4), s);
            CHECK(is_isomorphic(sub, make_path(3)));
        }
    }
    SUBCASE("containment spot checks") {
        CHECK(contains_induced(make_null(), make_complete(3)));
        CHECK(contains_induced(make_complete(3), make_complete(4)));
        CHECK(contains_induced(make_path(3), make_cycle(5)));
        CHECK_FALSE(contains_induced(make_path(3), make_complete(3)));
        CHECK_FALSE(contains_induced(make_cycle(4), make_complete(4)));
        CHECK_FALSE(contains_induced(make_empty(2), make_complete(2)));
    }
}

TEST_CASE("vertex transitivity agrees with the orbit oracle") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : all_graphs(n)) {
            CHECK(is_vertex_transitive(g) == is_vertex_transitive_orbit_bruteforce(g));
        }
    }
    CHECK(is_vertex_transitive(make_cycle(5)));
    CHECK(is_vertex_transitive(make_complete(4)));
    CHECK(is_vertex_transitive(make_complete_multipartite({3, 3})));
    CHECK(is_vertex_transitive(disjoint_union(make_complete(3), make_complete(3))));
    CHECK_FALSE(is_vertex_transitive(make_path(3)));
    CHECK_FALSE(is_vertex_transitive(make_house()));
}

TEST_CASE("order bound refuses oversized inputs") {
    int saved = canonical_order_bound();
    set_canonical_order_bound(5);
    CHECK_THROWS(canonical_form(make_empty(6)));
    CHECK(canonical_form(make_empty(5)).bytes.size() == 16);
    set_canonical_order_bound(saved);
    CHECK(canonical_form(make_empty(6)).bytes.size() == 22);
}

TEST_CASE("cache clearing does not change codes") {
    Graph g = make_house();
    CanonicalCode before = canonical_form(g);
    clear_canonical_cache();
    CHECK(canonical_form(g) == before);
}

TEST_SUITE_END();
