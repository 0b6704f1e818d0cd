// Finite undirected multigraphs stored as symmetric multiplicity matrices.
//
// Vertices are the contiguous integers 0..order-1. adj[i][j] holds the
// multiplicity of the edge {i,j} and adj[i][i] the number of loops at i.
// The order-0 graph (the null graph) is a valid value. A graph is simple
// when every off-diagonal entry is 0 or 1 and the diagonal is zero; the
// named-family constructors always produce simple graphs.
//
// Induced subgraphs renumber vertices by sorted position, so downstream
// code never depends on the labels of the host graph.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gposet {

struct Graph {
    int order = 0;
    std::vector<std::vector<int>> adj;

    static Graph with_order(int n);

    bool is_simple() const;
    // Sum of multiplicities over unordered vertex pairs; loops count once.
    int edge_count() const;
    bool has_edge(int i, int j) const { return adj[i][j] > 0; }
    void add_edge(int i, int j, int multiplicity = 1);

    bool operator==(const Graph& other) const = default;
};

Graph induced_subgraph(const Graph& g, const std::vector<int>& s);
Graph delete_vertex(const Graph& g, int v);
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);

// Two copies of h, with copy 0's vertex v joined to every vertex of copy 1.
// Copy 0 occupies vertices 0..|h|-1 and copy 1 occupies |h|..2|h|-1.
Graph d_v_construction(const Graph& h, int v);

Graph make_null();
Graph make_path(int n);      // P_n, n >= 1
Graph make_cycle(int n);     // C_n, n >= 3
Graph make_complete(int n);  // K_n, n >= 1
Graph make_empty(int n);     // n isolated vertices, n >= 1
Graph make_complete_multipartite(const std::vector<int>& parts);
Graph make_house();

struct StructuralPredicates {
    bool is_connected = false;
    bool has_pendant = false;
    bool contains_triangle = false;
    std::vector<int> degree_sequence;  // sorted descending, loops count twice
    bool is_bipartite = false;
};

StructuralPredicates structural_predicates(const Graph& g);

bool is_connected(const Graph& g);
bool has_pendant(const Graph& g);
bool contains_triangle(const Graph& g);
std::vector<int> degree_sequence(const Graph& g);
bool is_bipartite(const Graph& g);

}  // namespace gposet
