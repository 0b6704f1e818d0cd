// Unit tests for the closed-form Mobius rules and the sequences they
// evaluate to. Every formula is diffed against the Hasse recursion (via
// down-sets or the path poset) over its whole affordable domain, and the
// structural recurrences behind the two-path Fibonacci rule are verified
// as properties of the recursion itself.
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "doctest.h"
#include "gposet/canonical.hpp"
#include "gposet/enumerate.hpp"
#include "gposet/fixtures.hpp"
#include "gposet/formulas.hpp"
#include "gposet/graph.hpp"
#include "gposet/interval.hpp"
#include "gposet/path_multiset.hpp"
#include "helpers.hpp"

using namespace gposet;

namespace {

PathMultiset pm(std::vector<int> parts) { return PathMultiset::of(std::move(parts)); }

PathMultiset repeated(int part, int times) {
    return PathMultiset::of(std::vector<int>(static_cast<std::size_t>(times), part));
}

std::int64_t mu_tilde(const PathMultiset& top) { return path_mobius(pm({1, 1}), top); }

Graph bipartite_graph(int a1, int a2) {
    if (a1 + a2 == 0) return make_null();
    if (a2 == 0) return make_empty(a1);
    return make_complete_multipartite({a1, a2});
}

}  // namespace

TEST_SUITE_BEGIN("formulas");

TEST_CASE("sequences") {
    SUBCASE("binomial") {
        CHECK(binomial(0, 0) == 1);
        CHECK(binomial(5, 2) == 10);
        CHECK(binomial(10, 10) == 1);
        CHECK(binomial(7, 9) == 0);
        CHECK(binomial(7, -1) == 0);
        CHECK_THROWS(binomial(-1, 0));
        for (int n = 0; n <= 20; ++n) {
            std::int64_t row_sum = 0;
            for (int k = 0; k <= n; ++k) {
                CHECK(binomial(n, k) == binomial(n, n - k));
                row_sum += binomial(n, k);
            }
            CHECK(row_sum == (std::int64_t{1} << n));
        }
        CHECK(binomial(60, 30) == 118264581564861424LL);
        CHECK_THROWS(binomial(70, 35));
    }
    SUBCASE("catalan") {
        const std::vector<std::int64_t> expected{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
        for (int n = 0; n < static_cast<int>(expected.size()); ++n) {
            CHECK(catalan(n) == expected[static_cast<std::size_t>(n)]);
        }
        CHECK(catalan(15) == 9694845);
    }
    SUBCASE("fibonacci") {
        CHECK(fibonacci(0) == 0);
        CHECK(fibonacci(1) == 1);
        CHECK(fibonacci(2) == 1);
        CHECK(fibonacci(10) == 55);
        for (int n = 2; n <= 40; ++n) CHECK(fibonacci(n) == fibonacci(n - 1) + fibonacci(n - 2));
    }
    SUBCASE("schroder triangle") {
        CHECK(schroder_t(3, 0) == 1);
        CHECK(schroder_t(3, 1) == 6);
        CHECK(schroder_t(3, 2) == 10);
        CHECK(schroder_t(3, 3) == 5);
        CHECK(schroder_t(4, 2) == 30);
        for (int n = 0; n <= 10; ++n) CHECK(schroder_t(n, n) == catalan(n));
    }
}

TEST_CASE("null-graph bottom rule") {
    CHECK(mu_null_bottom(make_null()) == 1);
    CHECK(mu_null_bottom(make_complete(1)) == -1);
    CHECK(mu_null_bottom(make_complete(5)) == 0);
    Graph loop = Graph::with_order(1);
    loop.add_edge(0, 0);
    CHECK_THROWS(mu_null_bottom(loop));
    for (int n = 0; n <= 4; ++n) {
        for (const Graph& g : all_graphs(n)) {
            CHECK(mu_null_bottom(g) == mobius(make_null(), g));
        }
    }
}

TEST_CASE("vertex-transitive top rule") {
    struct NamedFamily {
        ClosedForm form;
        Graph graph;
    };
    std::vector<NamedFamily> families;
    for (int n = 4; n <= 6; ++n) {
        families.push_back({{ClosedFormFamily::complete, {n}}, make_complete(n)});
        families.push_back({{ClosedFormFamily::empty_graph, {n}}, make_empty(n)});
    }
    for (int n = 5; n <= 7; ++n) families.push_back({{ClosedFormFamily::cycle, {n}}, make_cycle(n)});
    families.push_back({{ClosedFormFamily::multipartite, {2, 2}},
                        make_complete_multipartite({2, 2})});
    families.push_back({{ClosedFormFamily::multipartite, {3, 2}},
                        make_complete_multipartite({3, 3})});
    families.push_back({{ClosedFormFamily::multipartite, {2, 3}},
                        make_complete_multipartite({2, 2, 2})});
    for (const NamedFamily& f : families) {
        DownSet ds = build_down_set(f.graph);
        for (std::size_t i = 0; i < ds.graphs.size(); ++i) {
            const Graph& h = ds.graphs[i];
            if (h.order == 0) continue;
            std::optional<std::int64_t> predicted = mu_named_top(h, f.form);
            if (h.order >= f.graph.order - 1) {
                CHECK_FALSE(predicted.has_value());
            } else {
                REQUIRE(predicted.has_value());
                CHECK(*predicted == 0);
                CHECK(ds.mobius_to_top[i] == 0);
            }
        }
    }
    CHECK(mu_named_top(make_null(), ClosedForm{ClosedFormFamily::complete, {3}}).value() == 0);
    CHECK(mu_named_top(make_null(), ClosedForm{ClosedFormFamily::complete, {1}}).value() == -1);
    CHECK_THROWS(mu_named_top(make_complete(1), ClosedForm{ClosedFormFamily::complete, {}}));
    CHECK_THROWS(mu_named_top(make_complete(1), ClosedForm{ClosedFormFamily::null_bottom, {}}));
}

TEST_CASE("complete bipartite rule") {
    SUBCASE("stated cases") {
        CHECK(mu_complete_bipartite(2, 2, 2, 2) == 1);
        CHECK(mu_complete_bipartite(2, 2, 3, 2) == -1);
        CHECK(mu_complete_bipartite(2, 1, 3, 2) == 1);
        CHECK(mu_complete_bipartite(1, 1, 3, 3) == 0);
        CHECK(mu_complete_bipartite(2, 2, 3, 3) == 0);
        CHECK(mu_complete_bipartite(0, 0, 0, 0) == 1);
        CHECK(mu_complete_bipartite(0, 0, 1, 0) == -1);
        CHECK(mu_complete_bipartite(0, 0, 2, 1) == 0);
        CHECK_THROWS(mu_complete_bipartite(3, 0, 2, 2));
        CHECK_THROWS(mu_complete_bipartite(-1, 0, 2, 2));
    }
    SUBCASE("agreement with the recursion over every bipartite pair") {
        for (int b1 = 1; b1 <= 5; ++b1) {
            for (int b2 = 1; b2 <= b1 && b1 + b2 <= 6; ++b2) {
                Graph host = make_complete_multipartite({b1, b2});
                DownSet ds = build_down_set(host);
                int expected_elements = 0;
                for (int a1 = 0; a1 <= b1; ++a1) {
                    for (int a2 = 0; a2 <= a1 && a2 <= b2; ++a2) {
                        ++expected_elements;
                        Graph h = bipartite_graph(a1, a2);
                        auto it = ds.index_of.find(canonical_form(h));
                        REQUIRE(it != ds.index_of.end());
                        CHECK(mu_complete_bipartite(a1, a2, b1, b2) ==
                              ds.mobius_to_top[static_cast<std::size_t>(it->second)]);
                    }
                }
                CHECK(static_cast<int>(ds.graphs.size()) == expected_elements);
            }
        }
    }
}

TEST_CASE("path-to-path rule") {
    for (int x = 1; x <= 9; ++x) {
        for (int m = 1; m <= x; ++m) {
            CHECK(mu_path_to_path(m, x) == path_mobius(pm({m}), pm({x})));
            CHECK(mu_path_to_path(m, x) == ((x - m) % 2 == 0 ? 1 : -1));
        }
    }
    CHECK_THROWS(mu_path_to_path(0, 3));
    CHECK_THROWS(mu_path_to_path(4, 3));
}

TEST_CASE("two-path Fibonacci rule") {
    for (int a = 2; a <= 9; ++a) {
        for (int b = 2; b <= a && a + b <= 11; ++b) {
            CHECK(mu_two_paths(a, b) == mu_tilde(pm({a, b})));
        }
    }
    CHECK(mu_two_paths(5, 5) == fibonacci(3));
    CHECK(mu_two_paths(7, 3) == fibonacci(3));
    CHECK(mu_two_paths(6, 3) == -fibonacci(3));
    CHECK_THROWS(mu_two_paths(3, 1));
    CHECK_THROWS(mu_two_paths(1, 2));
}

TEST_CASE("recurrences behind the two-path rule hold in the recursion") {
    SUBCASE("three or more parts force zero unless a one is present") {
        for (const PathMultiset& a : testutil::multisets_up_to(10)) {
            const int parts = static_cast<int>(a.parts.size());
            if ((parts == 3 && a.count(1) == 0) || parts > 3) {
                CAPTURE(a.to_string());
                CHECK(mu_tilde(a) == 0);
            }
        }
    }
    SUBCASE("appending a one flips the sign") {
        for (int a = 2; a <= 7; ++a) {
            for (int b = 2; b <= a && a + b <= 9; ++b) {
                CHECK(mu_tilde(pm({a, b, 1})) == -mu_tilde(pm({a, b})));
            }
        }
    }
    SUBCASE("shrinking the long part flips the sign") {
        for (int a = 4; a <= 9; ++a) {
            for (int b = 2; b < a - 1 && a + b <= 11; ++b) {
                CHECK(mu_tilde(pm({a, b})) == -mu_tilde(pm({a - 1, b})));
            }
        }
    }
    SUBCASE("the Fibonacci seeds") {
        for (int x = 2; x <= 6; ++x) CHECK(mu_tilde(pm({x, x - 1})) == -fibonacci(x - 1));
        for (int x = 2; x <= 5; ++x) CHECK(mu_tilde(pm({x, x})) == fibonacci(x - 2));
    }
    SUBCASE("the interval over equal twos is a chain") {
        for (int n = 1; n <= 6; ++n) {
            PathDownSet pds = build_path_down_set(repeated(2, n));
            std::vector<PathMultiset> between;
            for (const PathMultiset& z : pds.elements) {
                if (packing_contains(repeated(1, n), z)) between.push_back(z);
            }
            CHECK(static_cast<int>(between.size()) == n + 1);
            for (const PathMultiset& z : between) {
                CHECK(static_cast<int>(z.parts.size()) == n);
                CHECK(z.count(1) + z.count(2) == n);
            }
            CHECK(path_mobius(repeated(1, n), repeated(2, n)) == (n == 1 ? -1 : 0));
        }
    }
}

TEST_CASE("equal-paths column formula") {
    const auto& table = fixtures::equal_paths_table();
    for (const auto& [cell, expected] : table) {
        const auto [n, x] = cell;
        std::optional<std::int64_t> predicted = mu_n_paths_column(x, n);
        if (n >= 3 && x >= 6) {
            CHECK_FALSE(predicted.has_value());
        } else {
            REQUIRE(predicted.has_value());
            CHECK(*predicted == expected);
        }
        if (n + x <= 9) {
            CHECK(path_mobius(repeated(1, n), repeated(x, n)) == expected);
        }
    }
}

TEST_CASE("mixed P4 and P3 column formula") {
    for (int x = 0; x <= 3; ++x) {
        for (int y = (x == 0 ? 1 : 0); 4 * x + 3 * y <= 10; ++y) {
            std::vector<int> parts;
            parts.insert(parts.end(), static_cast<std::size_t>(x), 4);
            parts.insert(parts.end(), static_cast<std::size_t>(y), 3);
            PathMultiset top = PathMultiset::of(parts);
            std::int64_t expected = path_mobius(repeated(1, x + y), top);
            CHECK(mu_p4_p3_mix(x, y) == expected);
            CHECK(mu_p4_p3_mix(x, y) == (x % 2 == 0 ? 1 : -1) * binomial(x + y, y));
        }
    }
    CHECK_THROWS(mu_p4_p3_mix(0, 0));
}

TEST_CASE("closed-form dispatch") {
    SUBCASE("named predictions") {
        auto two_paths_pair = closed_form_prediction(make_empty(2), to_graph(pm({4, 4})));
        REQUIRE(two_paths_pair.has_value());
        CHECK(two_paths_pair->value == 1);
        auto path_pair = closed_form_prediction(make_path(1), make_path(9));
        REQUIRE(path_pair.has_value());
        CHECK(path_pair->value == 1);
        CHECK(path_pair->description.find("path") != std::string::npos);
        auto cycle_pair = closed_form_prediction(make_empty(2), make_cycle(7));
        REQUIRE(cycle_pair.has_value());
        CHECK(cycle_pair->value == 0);
        auto bipartite_pair = closed_form_prediction(make_path(3), make_complete_multipartite({3, 2}));
        REQUIRE(bipartite_pair.has_value());
        CHECK(bipartite_pair->value == 1);
        CHECK(mobius(make_path(3), make_complete_multipartite({3, 2})) == 1);
        CHECK_FALSE(closed_form_prediction(make_path(3), make_house()).has_value());
    }
    SUBCASE("every prediction agrees with the recursion on small tops") {
        for (int n = 1; n <= 5; ++n) {
            for (const Graph& top : all_graphs(n)) {
                DownSet ds = build_down_set(top);
                for (std::size_t i = 0; i < ds.graphs.size(); ++i) {
                    auto predicted = closed_form_prediction(ds.graphs[i], top);
                    if (!predicted.has_value()) continue;
                    CAPTURE(predicted->description);
                    CHECK(predicted->value == ds.mobius_to_top[i]);
                }
            }
        }
    }
}

TEST_SUITE_END();
