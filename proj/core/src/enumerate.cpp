#include "gposet/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "gposet/interval.hpp"

namespace gposet {

std::vector<Graph> all_graphs(int order, bool connected_only) {
    if (order < 0) throw std::invalid_argument("all_graphs: negative order");
    std::vector<Graph> current{make_null()};
    for (int k = 1; k <= order; ++k) {
        std::set<CanonicalCode> seen;
        for (const Graph& parent : current) {
            std::uint64_t masks = std::uint64_t{1} << (k - 1);
            for (std::uint64_t mask = 0; mask < masks; ++mask) {
                Graph extended = Graph::with_order(k);
                for (int i = 0; i < k - 1; ++i) {
                    for (int j = 0; j < i; ++j) {
                        if (parent.adj[i][j]) extended.add_edge(i, j, parent.adj[i][j]);
                    }
                }
                for (int j = 0; j < k - 1; ++j) {
                    if ((mask >> j) & 1) extended.add_edge(k - 1, j);
                }
                seen.insert(canonical_form(extended));
            }
        }
        current.clear();
        for (const CanonicalCode& code : seen) current.push_back(graph_from_code(code));
    }
    if (connected_only) {
        std::erase_if(current, [](const Graph& g) { return g.order == 0 || !is_connected(g); });
    }
    return current;
}

DownSet build_down_set(const Graph& top, bool connected_variant) {
    if (connected_variant && !is_connected(top)) {
        throw std::invalid_argument("build_down_set: connected variant needs a connected top");
    }
    std::map<CanonicalCode, Graph> elements;
    std::set<std::pair<CanonicalCode, CanonicalCode>> cover_pairs;  // (lower, upper)
    CanonicalCode top_code = canonical_form(top);
    elements.emplace(top_code, top);
    std::vector<std::pair<Graph, CanonicalCode>> level{{top, top_code}};
    int min_order = connected_variant ? 1 : 0;
    while (!level.empty() && level.front().first.order > min_order) {
        std::vector<std::pair<Graph, CanonicalCode>> next;
        for (const auto& [parent, parent_code] : level) {
            for (int v = 0; v < parent.order; ++v) {
                Graph child = delete_vertex(parent, v);
                if (connected_variant && !is_connected(child)) continue;
                CanonicalCode code = canonical_form(child);
                if (elements.emplace(code, child).second) next.emplace_back(child, code);
                cover_pairs.emplace(code, parent_code);
            }
        }
        level = std::move(next);
    }

    DownSet ds;
    ds.connected_variant = connected_variant;
    std::vector<std::pair<std::pair<int, CanonicalCode>, Graph>> ordered;
    for (const auto& [code, graph] : elements) ordered.push_back({{graph.order, code}, graph});
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [key, graph] : ordered) {
        ds.index_of.emplace(key.second, static_cast<int>(ds.graphs.size()));
        ds.graphs.push_back(graph);
        ds.codes.push_back(key.second);
    }
    std::size_t n = ds.graphs.size();
    ds.covers_down.resize(n);
    ds.covers_up.resize(n);
    for (const auto& [lower, upper] : cover_pairs) {
        int lo = ds.index_of.at(lower);
        int hi = ds.index_of.at(upper);
        ds.covers_down[hi].push_back(lo);
        ds.covers_up[lo].push_back(hi);
    }
    ds.top_index = ds.index_of.at(top_code);

    std::size_t words = (n + 63) / 64;
    ds.above.assign(n, std::vector<std::uint64_t>(words, 0));
    std::vector<int> by_descending_order(n);
    for (std::size_t i = 0; i < n; ++i) by_descending_order[i] = static_cast<int>(i);
    std::sort(by_descending_order.begin(), by_descending_order.end(),
              [&](int a, int b) { return ds.graphs[a].order > ds.graphs[b].order; });
    for (int x : by_descending_order) {
        ds.above[x][static_cast<std::size_t>(x) / 64] |= std::uint64_t{1} << (x % 64);
        for (int up : ds.covers_up[x]) {
            for (std::size_t w = 0; w < words; ++w) ds.above[x][w] |= ds.above[up][w];
        }
    }

    ds.mobius_to_top.assign(n, 0);
    for (int x : by_descending_order) {
        if (x == ds.top_index) {
            ds.mobius_to_top[x] = 1;
            continue;
        }
        std::int64_t total = 0;
        for (std::size_t z = 0; z < n; ++z) {
            if (static_cast<int>(z) != x && ds.leq(x, static_cast<int>(z))) {
                total = checked_add(total, ds.mobius_to_top[z]);
            }
        }
        ds.mobius_to_top[x] = checked_neg(total);
    }
    return ds;
}

}  // namespace gposet
