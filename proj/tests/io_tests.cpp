// Unit tests for serialization: graph6 round trips, the lossless
// multigraph format, DOT output, and the graph-spec mini-language.
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "gposet/canonical.hpp"
#include "gposet/enumerate.hpp"
#include "gposet/graph.hpp"
#include "gposet/io.hpp"

using namespace gposet;

TEST_SUITE_BEGIN("io");

TEST_CASE("graph6 round trips") {
    SUBCASE("every graph of order at most five survives a round trip") {
        for (int n = 0; n <= 5; ++n) {
            for (const Graph& g : all_graphs(n)) {
                Graph back = from_graph6(to_graph6(g));
                CHECK(back.order == g.order);
                CHECK(back.adj == g.adj);
            }
        }
    }
    SUBCASE("known encodings") {
        CHECK(to_graph6(make_empty(1)) == "@");
        CHECK(to_graph6(make_complete(2)) == "A_");
        CHECK(is_isomorphic(from_graph6("Bw"), make_complete(3)));
    }
    SUBCASE("long orders use the extended header") {
        Graph big = make_empty(70);
        std::string text = to_graph6(big);
        CHECK(text.front() == '~');
        Graph back = from_graph6(text);
        CHECK(back.order == 70);
        CHECK(back.edge_count() == 0);
    }
    SUBCASE("rejects multigraphs and malformed text") {
        Graph multi = Graph::with_order(2);
        multi.add_edge(0, 1, 2);
        CHECK_THROWS(to_graph6(multi));
        Graph loop = Graph::with_order(1);
        loop.add_edge(0, 0);
        CHECK_THROWS(to_graph6(loop));
        CHECK_THROWS(from_graph6(""));
        CHECK_THROWS(from_graph6("A"));
    }
}

TEST_CASE("multigraph text round trips") {
    Graph g = Graph::with_order(3);
    g.add_edge(0, 1, 2);
    g.add_edge(1, 2);
    g.add_edge(2, 2);
    SUBCASE("newline form") {
        Graph back = from_multigraph_text(to_multigraph_text(g));
        CHECK(back.adj == g.adj);
    }
    SUBCASE("semicolon form") {
        Graph back = from_multigraph_text("n=3;0 1 2;1 2 1;2 2 1");
        CHECK(back.adj == g.adj);
    }
    SUBCASE("rejects malformed text") {
        CHECK_THROWS(from_multigraph_text(""));
        CHECK_THROWS(from_multigraph_text("0 1 1"));
        CHECK_THROWS(from_multigraph_text("n=2;0 5 1"));
    }
}

TEST_CASE("dot output lists vertices and edges") {
    std::string dot = to_dot(make_path(2));
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("0 -- 1") != std::string::npos);
}

TEST_CASE("graph-spec mini-language") {
    SUBCASE("named families") {
        CHECK(parse_graph_spec("null").order == 0);
        CHECK(is_isomorphic(parse_graph_spec("K4"), make_complete(4)));
        CHECK(is_isomorphic(parse_graph_spec("complete:4"), make_complete(4)));
        CHECK(is_isomorphic(parse_graph_spec("nK1:3"), make_empty(3)));
        CHECK(is_isomorphic(parse_graph_spec("empty:3"), make_empty(3)));
        CHECK(is_isomorphic(parse_graph_spec("path:5"), make_path(5)));
        CHECK(is_isomorphic(parse_graph_spec("cycle:6"), make_cycle(6)));
        CHECK(is_isomorphic(parse_graph_spec("house"), make_house()));
        CHECK(is_isomorphic(parse_graph_spec("multipartite:2,3"),
                            make_complete_multipartite({2, 3})));
    }
    SUBCASE("unions") {
        Graph two_paths = parse_graph_spec("paths:4,4");
        CHECK(two_paths.order == 8);
        CHECK(two_paths.edge_count() == 6);
        Graph two_houses = parse_graph_spec("houses:2");
        CHECK(two_houses.order == 10);
        CHECK(two_houses.edge_count() == 12);
    }
    SUBCASE("nested vertex join") {
        Graph dv = parse_graph_spec("Dv:cycle:4");
        CHECK(is_isomorphic(dv, d_v_construction(make_cycle(4), 0)));
    }
    SUBCASE("explicit and raw graph6") {
        CHECK(is_isomorphic(parse_graph_spec("g6:Bw"), make_complete(3)));
        CHECK(is_isomorphic(parse_graph_spec("Bw"), make_complete(3)));
    }
    SUBCASE("multigraph passthrough") {
        Graph g = parse_graph_spec("n=2;0 1 2");
        CHECK(g.adj[0][1] == 2);
    }
    SUBCASE("rejects nonsense") {
        CHECK_THROWS(parse_graph_spec(""));
        CHECK_THROWS(parse_graph_spec("path:0"));
        CHECK_THROWS(parse_graph_spec("K"));
        CHECK_THROWS(parse_graph_spec("\x01\x02"));
    }
}

TEST_SUITE_END();
