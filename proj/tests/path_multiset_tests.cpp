// Unit tests for the path-union subposet: multiset arithmetic, the
// packing-order containment test, cover enumeration, and the down-set
// Mobius pass. The containment and cover relations are checked against
// the graph poset itself, which is the defining oracle.
#include <algorithm>
#include <optional>
#include <vector>

#include "doctest.h"
#include "gposet/canonical.hpp"
#include "gposet/fixtures.hpp"
#include "gposet/graph.hpp"
#include "gposet/interval.hpp"
#include "gposet/path_multiset.hpp"
#include "helpers.hpp"

using namespace gposet;

TEST_SUITE_BEGIN("path multiset");

TEST_CASE("multiset basics") {
    PathMultiset m = PathMultiset::of({1, 4, 3, 4});
    CHECK(m.parts == std::vector<int>{4, 4, 3, 1});
    CHECK(m.total() == 12);
    CHECK(m.count(4) == 2);
    CHECK(m.count(2) == 0);
    CHECK(m.to_string() == "{4,4,3,1}");
    CHECK(PathMultiset{}.to_string() == "{}");
    CHECK(PathMultiset{}.empty());
    CHECK_THROWS(PathMultiset::of({3, 0}));
    CHECK_THROWS(PathMultiset::of({-1}));
}

TEST_CASE("graph round trips and path recognition") {
    for (const PathMultiset& m : testutil::multisets_up_to(7)) {
        Graph g = to_graph(m);
        CHECK(g.order == m.total());
        std::optional<PathMultiset> back = multiset_from_graph(g);
        REQUIRE(back.has_value());
        CHECK(*back == m);
    }
    CHECK_FALSE(multiset_from_graph(make_cycle(3)).has_value());
    CHECK_FALSE(multiset_from_graph(make_complete_multipartite({1, 3})).has_value());
    Graph doubled = Graph::with_order(2);
    doubled.add_edge(0, 1, 2);
    CHECK_FALSE(multiset_from_graph(doubled).has_value());
}

TEST_CASE("packing containment agrees with induced containment") {
    std::vector<PathMultiset> all = testutil::multisets_up_to(7);
    for (const PathMultiset& host : all) {
        Graph host_graph = to_graph(host);
        for (const PathMultiset& sub : all) {
            CHECK(packing_contains(sub, host) == contains_induced(to_graph(sub), host_graph));
        }
    }
}

TEST_CASE("packing containment spot checks") {
    auto leq = [](std::vector<int> a, std::vector<int> b) {
        return packing_contains(PathMultiset::of(std::move(a)), PathMultiset::of(std::move(b)));
    };
    CHECK(leq({1, 1}, {3}));
    CHECK_FALSE(leq({1, 1}, {2}));
    CHECK(leq({2, 2}, {5}));
    CHECK_FALSE(leq({2, 2}, {4}));
    CHECK(leq({3, 1}, {5}));
    CHECK(leq({1, 1, 1}, {5}));
    CHECK_FALSE(leq({1, 1, 1}, {4}));
    CHECK(leq({4, 2}, {4, 2}));
    CHECK_FALSE(leq({5}, {4, 4}));
}

TEST_CASE("covers are exactly the single vertex deletions") {
    auto pm = [](std::vector<int> parts) { return PathMultiset::of(std::move(parts)); };
    auto sorted_covers = [](const PathMultiset& m) {
        std::vector<PathMultiset> covers = covers_below(m);
        std::sort(covers.begin(), covers.end());
        return covers;
    };
    CHECK(sorted_covers(pm({2, 2})) == std::vector<PathMultiset>{pm({2, 1})});
    CHECK(sorted_covers(pm({4, 4})) == std::vector<PathMultiset>{pm({4, 2, 1}), pm({4, 3})});
    CHECK(sorted_covers(pm({5})) == std::vector<PathMultiset>{pm({2, 2}), pm({3, 1}), pm({4})});
    CHECK(sorted_covers(pm({1})) == std::vector<PathMultiset>{PathMultiset{}});

    for (const PathMultiset& m : testutil::multisets_up_to(8)) {
        if (m.empty()) continue;
        std::vector<PathMultiset> expected;
        for (const PathMultiset& below : testutil::partitions_of(m.total() - 1, m.total())) {
            if (packing_contains(below, m)) expected.push_back(below);
        }
        std::sort(expected.begin(), expected.end());
        std::vector<PathMultiset> got = covers_below(m);
        std::sort(got.begin(), got.end());
        CHECK(got == expected);
    }
}

TEST_CASE("path down-set of two four-paths") {
    PathDownSet pds = build_path_down_set(PathMultiset::of({4, 4}));
    REQUIRE(pds.elements.size() == 25);
    CHECK(pds.elements[0].empty());
    CHECK(pds.top_index == 24);
    CHECK(pds.mobius_to_top[pds.top_index] == 1);
    // The recorded diagram values are rooted at the bottom 2K_1, not at
    // the top, so they are checked through a second Mobius pass.
    const auto& fixture = fixtures::two_p4_interval_mobius();
    int fixture_hits = 0;
    for (std::size_t i = 0; i < pds.elements.size(); ++i) {
        auto it = fixture.find(pds.elements[i]);
        if (it == fixture.end()) continue;
        CHECK(path_mobius(PathMultiset::of({1, 1}), pds.elements[i]) == it->second);
        ++fixture_hits;
    }
    CHECK(fixture_hits == 22);
    for (std::size_t x = 0; x < pds.elements.size(); ++x) {
        for (std::size_t y = 0; y < pds.elements.size(); ++y) {
            CHECK(pds.leq(static_cast<int>(x), static_cast<int>(y)) ==
                  packing_contains(pds.elements[x], pds.elements[y]));
        }
    }
}

TEST_CASE("path mobius agrees with the graph poset") {
    std::vector<PathMultiset> all = testutil::multisets_up_to(6);
    for (const PathMultiset& host : all) {
        Graph host_graph = to_graph(host);
        for (const PathMultiset& sub : all) {
            if (!packing_contains(sub, host)) {
                CHECK(path_mobius(sub, host) == 0);
                continue;
            }
            CHECK(path_mobius(sub, host) == mobius(to_graph(sub), host_graph));
        }
    }
}

TEST_SUITE_END();
