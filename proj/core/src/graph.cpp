#include "gposet/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace gposet {

Graph Graph::with_order(int n) {
    if (n < 0) throw std::invalid_argument("graph order must be non-negative");
    Graph g;
    g.order = n;
    g.adj.assign(n, std::vector<int>(n, 0));
    return g;
}

bool Graph::is_simple() const {
    for (int i = 0; i < order; ++i) {
        if (adj[i][i] != 0) return false;
        for (int j = 0; j < order; ++j) {
            if (adj[i][j] < 0 || adj[i][j] > 1) return false;
        }
    }
    return true;
}

int Graph::edge_count() const {
    int total = 0;
    for (int i = 0; i < order; ++i) {
        for (int j = i; j < order; ++j) total += adj[i][j];
    }
    return total;
}

void Graph::add_edge(int i, int j, int multiplicity) {
    if (i < 0 || i >= order || j < 0 || j >= order) {
        throw std::out_of_range("add_edge: vertex index out of range");
    }
    if (multiplicity < 0) throw std::invalid_argument("add_edge: negative multiplicity");
    if (i == j) {
        adj[i][i] += multiplicity;
    } else {
        adj[i][j] += multiplicity;
        adj[j][i] += multiplicity;
    }
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& s) {
    std::vector<int> vs = s;
    std::sort(vs.begin(), vs.end());
    for (int v : vs) {
        if (v < 0 || v >= g.order) throw std::out_of_range("induced_subgraph: vertex index out of range");
    }
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) {
        throw std::invalid_argument("induced_subgraph: duplicate vertex in selection");
    }
    Graph result = Graph::with_order(static_cast<int>(vs.size()));
    for (int a = 0; a < result.order; ++a) {
        for (int b = 0; b < result.order; ++b) {
            result.adj[a][b] = g.adj[vs[a]][vs[b]];
        }
    }
    return result;
}

Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order) throw std::out_of_range("delete_vertex: vertex index out of range");
    std::vector<int> keep;
    keep.reserve(g.order - 1);
    for (int i = 0; i < g.order; ++i) {
        if (i != v) keep.push_back(i);
    }
    return induced_subgraph(g, keep);
}

Graph complement(const Graph& g) {
    if (!g.is_simple()) throw std::invalid_argument("complement: graph must be simple");
    Graph result = Graph::with_order(g.order);
    for (int i = 0; i < g.order; ++i) {
        for (int j = 0; j < g.order; ++j) {
            if (i != j) result.adj[i][j] = 1 - g.adj[i][j];
        }
    }
    return result;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    Graph result = Graph::with_order(g.order + h.order);
    for (int i = 0; i < g.order; ++i) {
        for (int j = 0; j < g.order; ++j) result.adj[i][j] = g.adj[i][j];
    }
    for (int i = 0; i < h.order; ++i) {
        for (int j = 0; j < h.order; ++j) result.adj[g.order + i][g.order + j] = h.adj[i][j];
    }
    return result;
}

Graph d_v_construction(const Graph& h, int v) {
    if (v < 0 || v >= h.order) throw std::out_of_range("d_v_construction: vertex index out of range");
    Graph result = disjoint_union(h, h);
    for (int x = 0; x < h.order; ++x) {
        result.add_edge(v, h.order + x);
    }
    return result;
}

Graph make_null() { return Graph::with_order(0); }

Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("make_path: need n >= 1");
    Graph g = Graph::with_order(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("make_cycle: need n >= 3");
    Graph g = Graph::with_order(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("make_complete: need n >= 1");
    Graph g = Graph::with_order(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    }
    return g;
}

Graph make_empty(int n) {
    if (n < 1) throw std::invalid_argument("make_empty: need n >= 1");
    return Graph::with_order(n);
}

Graph make_complete_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) throw std::invalid_argument("make_complete_multipartite: need at least one part");
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("make_complete_multipartite: part sizes must be positive");
    }
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    Graph g = Graph::with_order(n);
    std::vector<int> part_of(n);
    int next = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        for (int k = 0; k < parts[p]; ++k) part_of[next++] = static_cast<int>(p);
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (part_of[i] != part_of[j]) g.add_edge(i, j);
        }
    }
    return g;
}

// C_5 with one chord: a triangle 0-1-2 sitting on the square 1-3-4-2.
// Degree sequence (3,3,2,2,2).
Graph make_house() {
    Graph g = Graph::with_order(5);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(3, 4);
    g.add_edge(2, 4);
    return g;
}

bool is_connected(const Graph& g) {
    if (g.order <= 1) return true;
    std::vector<char> seen(g.order, 0);
    std::queue<int> frontier;
    frontier.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!frontier.empty()) {
        int u = frontier.front();
        frontier.pop();
        for (int v = 0; v < g.order; ++v) {
            if (v != u && g.adj[u][v] > 0 && !seen[v]) {
                seen[v] = 1;
                ++reached;
                frontier.push(v);
            }
        }
    }
    return reached == g.order;
}

bool has_pendant(const Graph& g) {
    for (int v = 0; v < g.order; ++v) {
        int neighbours = 0;
        for (int u = 0; u < g.order; ++u) {
            if (u != v && g.adj[v][u] > 0) ++neighbours;
        }
        if (neighbours == 1) return true;
    }
    return false;
}

bool contains_triangle(const Graph& g) {
    for (int a = 0; a < g.order; ++a) {
        for (int b = a + 1; b < g.order; ++b) {
            if (g.adj[a][b] == 0) continue;
            for (int c = b + 1; c < g.order; ++c) {
                if (g.adj[a][c] > 0 && g.adj[b][c] > 0) return true;
            }
        }
    }
    return false;
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> degrees(g.order, 0);
    for (int v = 0; v < g.order; ++v) {
        for (int u = 0; u < g.order; ++u) {
            degrees[v] += (u == v) ? 2 * g.adj[v][v] : g.adj[v][u];
        }
    }
    std::sort(degrees.rbegin(), degrees.rend());
    return degrees;
}

bool is_bipartite(const Graph& g) {
    for (int v = 0; v < g.order; ++v) {
        if (g.adj[v][v] > 0) return false;
    }
    std::vector<int> colour(g.order, -1);
    for (int start = 0; start < g.order; ++start) {
        if (colour[start] != -1) continue;
        colour[start] = 0;
        std::queue<int> frontier;
        frontier.push(start);
        while (!frontier.empty()) {
            int u = frontier.front();
            frontier.pop();
            for (int v = 0; v < g.order; ++v) {
                if (v == u || g.adj[u][v] == 0) continue;
                if (colour[v] == -1) {
                    colour[v] = 1 - colour[u];
                    frontier.push(v);
                } else if (colour[v] == colour[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

StructuralPredicates structural_predicates(const Graph& g) {
    StructuralPredicates p;
    p.is_connected = is_connected(g);
    p.has_pendant = has_pendant(g);
    p.contains_triangle = contains_triangle(g);
    p.degree_sequence = degree_sequence(g);
    p.is_bipartite = is_bipartite(g);
    return p;
}

}  // namespace gposet
