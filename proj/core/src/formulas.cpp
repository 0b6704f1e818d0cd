#include "gposet/formulas.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "gposet/interval.hpp"
#include "gposet/path_multiset.hpp"

namespace gposet {

std::int64_t binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be non-negative");
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t result = 1;
    // Multiplying before dividing keeps every intermediate value integral.
    for (int i = 1; i <= k; ++i) {
        result = checked_mul(result, n - k + i);
        result /= i;
    }
    return result;
}

std::int64_t catalan(int n) {
    if (n < 0) throw std::invalid_argument("catalan: n must be non-negative");
    return binomial(2 * n, n) / (n + 1);
}

std::int64_t fibonacci(int n) {
    if (n < 0) throw std::invalid_argument("fibonacci: n must be non-negative");
    std::int64_t a = 0;
    std::int64_t b = 1;
    for (int i = 0; i < n; ++i) {
        std::int64_t next = checked_add(a, b);
        a = b;
        b = next;
    }
    return a;
}

std::int64_t schroder_t(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("schroder_t: indices must be non-negative");
    if (k > n) return 0;
    std::int64_t product = checked_mul(binomial(n, k), binomial(n + k, k));
    if (product % (k + 1) != 0) throw std::logic_error("schroder_t: non-integral value");
    return product / (k + 1);
}

std::int64_t mu_null_bottom(const Graph& g) {
    for (int v = 0; v < g.order; ++v) {
        if (g.has_edge(v, v)) {
            throw std::invalid_argument("mu_null_bottom: the rule requires a loop-free graph");
        }
    }
    if (g.order == 0) return 1;
    return g.order == 1 ? -1 : 0;
}

std::optional<std::int64_t> mu_named_top(const Graph& h, const ClosedForm& top) {
    int top_order = 0;
    switch (top.family) {
        case ClosedFormFamily::complete:
        case ClosedFormFamily::empty_graph:
            if (top.parameters.size() != 1 || top.parameters[0] < 0) {
                throw std::invalid_argument("mu_named_top: complete/empty tops take one non-negative order");
            }
            top_order = top.parameters[0];
            break;
        case ClosedFormFamily::cycle:
            if (top.parameters.size() != 1 || top.parameters[0] < 3) {
                throw std::invalid_argument("mu_named_top: cycle tops need order at least 3");
            }
            top_order = top.parameters[0];
            break;
        case ClosedFormFamily::multipartite:
            if (top.parameters.size() != 2 || top.parameters[0] < 1 || top.parameters[1] < 1) {
                throw std::invalid_argument("mu_named_top: multipartite tops take part size and part count");
            }
            top_order = top.parameters[0] * top.parameters[1];
            break;
        default:
            throw std::invalid_argument("mu_named_top: family is not a named vertex-transitive top");
    }
    if (h.order == 0) {
        if (top_order == 0) return 1;
        return top_order == 1 ? -1 : 0;
    }
    if (h.order != top_order - 1 && h.order != top_order) return 0;
    return std::nullopt;
}

std::int64_t mu_complete_bipartite(int a1, int a2, int b1, int b2) {
    if (a1 < 0 || a2 < 0 || b1 < 0 || b2 < 0) {
        throw std::invalid_argument("mu_complete_bipartite: part sizes must be non-negative");
    }
    if (a1 < a2) std::swap(a1, a2);
    if (b1 < b2) std::swap(b1, b2);
    if (a1 > b1 || a2 > b2) {
        throw std::invalid_argument("mu_complete_bipartite: bottom is not contained in top");
    }
    if (a1 == b1 && a2 == b2) return 1;
    if ((b1 - a1) + (b2 - a2) == 1) return -1;
    if (b1 - a1 == 1 && b2 - a2 == 1 && a1 != a2) return 1;
    return 0;
}

std::int64_t mu_path_to_path(int m, int x) {
    if (m < 1 || m > x) throw std::invalid_argument("mu_path_to_path: requires 1 <= m <= x");
    return (x - m) % 2 == 0 ? 1 : -1;
}

std::int64_t mu_two_paths(int a, int b) {
    if (b <= 1 || a < b) throw std::invalid_argument("mu_two_paths: requires a >= b > 1");
    if (a == b) return fibonacci(a - 2);
    std::int64_t value = fibonacci(b);
    return (a + b) % 2 == 0 ? value : checked_neg(value);
}

std::optional<std::int64_t> mu_n_paths_column(int x, int n) {
    if (x < 1 || n < 1) throw std::invalid_argument("mu_n_paths_column: x and n must be positive");
    if (n == 1) return (x + n) % 2 == 0 ? 1 : -1;
    if (x == 1 || x == 3) return 1;
    if (x == 2) return 0;
    if (x == 4) return (x + n) % 2 == 0 ? 1 : -1;
    if (n == 2) return fibonacci(x - 2);
    if (x == 5) return catalan(n);
    return std::nullopt;
}

std::int64_t mu_p4_p3_mix(int x, int y) {
    if (x < 0 || y < 0 || x + y < 1) throw std::invalid_argument("mu_p4_p3_mix: requires x + y >= 1");
    std::int64_t value = binomial(x + y, y);
    return x % 2 == 0 ? value : checked_neg(value);
}

namespace {

// Part sizes (weakly decreasing) when g is complete multipartite, i.e.
// its complement is a disjoint union of cliques; no value otherwise.
std::optional<std::vector<int>> complete_multipartite_parts(const Graph& g) {
    if (!g.is_simple() || g.order == 0) return std::nullopt;
    Graph co = complement(g);
    std::vector<int> parts;
    std::vector<char> seen(g.order, 0);
    for (int v = 0; v < g.order; ++v) {
        if (seen[v]) continue;
        std::vector<int> component{v};
        seen[v] = 1;
        for (std::size_t i = 0; i < component.size(); ++i) {
            for (int w = 0; w < g.order; ++w) {
                if (!seen[w] && co.has_edge(component[i], w)) {
                    seen[w] = 1;
                    component.push_back(w);
                }
            }
        }
        for (std::size_t i = 0; i < component.size(); ++i) {
            for (std::size_t j = i + 1; j < component.size(); ++j) {
                if (!co.has_edge(component[i], component[j])) return std::nullopt;
            }
        }
        parts.push_back(static_cast<int>(component.size()));
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return parts;
}

bool all_degrees_are(const Graph& g, int d) {
    for (int v = 0; v < g.order; ++v) {
        int degree = 0;
        for (int w = 0; w < g.order; ++w) {
            if (w != v && g.has_edge(v, w)) ++degree;
        }
        if (degree != d) return false;
    }
    return true;
}

struct NamedTop {
    ClosedForm form;
    const char* description;
};

std::optional<NamedTop> recognize_named_top(const Graph& g) {
    if (!g.is_simple() || g.order == 0) return std::nullopt;
    int n = g.order;
    int max_edges = n * (n - 1) / 2;
    if (g.edge_count() == max_edges) {
        return NamedTop{{ClosedFormFamily::complete, {n}}, "complete top rule"};
    }
    if (g.edge_count() == 0) {
        return NamedTop{{ClosedFormFamily::empty_graph, {n}}, "edgeless top rule"};
    }
    if (n >= 3 && is_connected(g) && all_degrees_are(g, 2)) {
        return NamedTop{{ClosedFormFamily::cycle, {n}}, "cycle top rule"};
    }
    if (auto parts = complete_multipartite_parts(g)) {
        if (parts->size() >= 2 && parts->front() == parts->back()) {
            return NamedTop{{ClosedFormFamily::multipartite,
                             {parts->front(), static_cast<int>(parts->size())}},
                            "balanced multipartite top rule"};
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<ClosedFormMatch> closed_form_prediction(const Graph& h, const Graph& g) {
    if (!h.is_simple() || !g.is_simple()) return std::nullopt;
    if (h.order == 0) return ClosedFormMatch{"null-graph bottom rule", mu_null_bottom(g)};

    auto h_paths = multiset_from_graph(h);
    auto g_paths = multiset_from_graph(g);
    if (h_paths && g_paths) {
        const PathMultiset& hm = *h_paths;
        const PathMultiset& gm = *g_paths;
        if (hm.parts.size() == 1 && gm.parts.size() == 1 && hm.parts[0] <= gm.parts[0]) {
            return ClosedFormMatch{"path-to-path rule", mu_path_to_path(hm.parts[0], gm.parts[0])};
        }
        if (h.edge_count() == 0) {
            int n = h.order;
            if (static_cast<int>(gm.parts.size()) == n && !gm.parts.empty() &&
                gm.parts.front() == gm.parts.back()) {
                if (auto value = mu_n_paths_column(gm.parts[0], n)) {
                    return ClosedFormMatch{"equal-paths column rule", *value};
                }
            }
            int x = gm.count(4);
            int y = gm.count(3);
            if (x + y >= 1 && x + y == static_cast<int>(gm.parts.size()) && x + y == n) {
                return ClosedFormMatch{"P4/P3 mix rule", mu_p4_p3_mix(x, y)};
            }
            if (n == 2 && gm.parts.size() == 2 && gm.parts[1] >= 2) {
                return ClosedFormMatch{"two-path Fibonacci rule", mu_two_paths(gm.parts[0], gm.parts[1])};
            }
        }
    }

    if (auto top = recognize_named_top(g)) {
        if (auto value = mu_named_top(h, top->form)) {
            return ClosedFormMatch{top->description, *value};
        }
    }

    auto h_parts = complete_multipartite_parts(h);
    auto g_parts = complete_multipartite_parts(g);
    if (h_parts && g_parts && h_parts->size() == 2 && g_parts->size() == 2 && (*h_parts)[1] >= 1 &&
        (*h_parts)[0] <= (*g_parts)[0] && (*h_parts)[1] <= (*g_parts)[1]) {
        return ClosedFormMatch{
            "complete bipartite rule",
            mu_complete_bipartite((*h_parts)[0], (*h_parts)[1], (*g_parts)[0], (*g_parts)[1])};
    }
    return std::nullopt;
}

}  // namespace gposet
