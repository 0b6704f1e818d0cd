#include "gposet/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace gposet {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("64-bit overflow in addition");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("64-bit overflow in multiplication");
    return out;
}

std::int64_t checked_neg(std::int64_t a) {
    std::int64_t out = 0;
    if (__builtin_sub_overflow(std::int64_t{0}, a, &out)) throw std::overflow_error("64-bit overflow in negation");
    return out;
}

namespace {

struct IndexedInterval {
    std::vector<Graph> graphs;
    std::vector<CanonicalCode> codes;
    std::vector<int> ranks;
    std::vector<std::vector<int>> covers_up;    // per element, indices one rank above
    std::vector<std::vector<int>> covers_down;  // per element, indices one rank below
    int bottom_index = -1;
    int top_index = -1;
};

// Reachability upward through covers; bit v of row x set when x <= v.
std::vector<std::vector<std::uint64_t>> upward_closure(const IndexedInterval& ii) {
    std::size_t n = ii.graphs.size();
    std::size_t words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> above(n, std::vector<std::uint64_t>(words, 0));
    std::vector<int> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return ii.ranks[a] > ii.ranks[b]; });
    for (int x : order) {
        above[x][x / 64] |= std::uint64_t{1} << (x % 64);
        for (int up : ii.covers_up[x]) {
            for (std::size_t w = 0; w < words; ++w) above[x][w] |= above[up][w];
        }
    }
    return above;
}

IndexedInterval build_indexed(const Graph& h, const Graph& g, bool connected_variant) {
    if (connected_variant && (!is_connected(h) || !is_connected(g))) {
        throw std::invalid_argument("build_interval: connected variant needs connected endpoints");
    }
    CanonicalCode bottom_code = canonical_form(h);
    IndexedInterval ii;
    std::map<CanonicalCode, int> index_of;
    auto add_element = [&](const Graph& graph, const CanonicalCode& code) {
        index_of.emplace(code, static_cast<int>(ii.graphs.size()));
        ii.graphs.push_back(graph);
        ii.codes.push_back(code);
        ii.ranks.push_back(graph.order - h.order);
        ii.covers_up.emplace_back();
        ii.covers_down.emplace_back();
    };

    CanonicalCode top_code = canonical_form(g);
    add_element(g, top_code);
    ii.top_index = 0;

    std::vector<int> current_level{0};
    for (int level_order = g.order; level_order > h.order; --level_order) {
        std::vector<int> next_level;
        for (int parent : current_level) {
            // Copy, not reference: add_element may reallocate ii.graphs.
            const Graph parent_graph = ii.graphs[parent];
            for (int v = 0; v < parent_graph.order; ++v) {
                Graph child = delete_vertex(parent_graph, v);
                if (connected_variant && !is_connected(child)) continue;
                CanonicalCode code = canonical_form(child);
                auto it = index_of.find(code);
                int child_index = -1;
                if (it != index_of.end()) {
                    child_index = it->second;
                } else {
                    if (child.order == h.order) {
                        if (code != bottom_code) continue;
                    } else if (!contains_induced(h, child)) {
                        continue;
                    }
                    child_index = static_cast<int>(ii.graphs.size());
                    add_element(child, code);
                    next_level.push_back(child_index);
                }
                if (std::find(ii.covers_down[parent].begin(), ii.covers_down[parent].end(), child_index) ==
                    ii.covers_down[parent].end()) {
                    ii.covers_down[parent].push_back(child_index);
                    ii.covers_up[child_index].push_back(parent);
                }
            }
        }
        current_level = std::move(next_level);
    }

    auto bottom_it = index_of.find(bottom_code);
    if (bottom_it == index_of.end()) {
        if (g.order == h.order && top_code == bottom_code) {
            ii.bottom_index = ii.top_index;
            return ii;
        }
        throw std::invalid_argument("build_interval: bottom does not occur in top");
    }
    ii.bottom_index = bottom_it->second;
    return ii;
}

std::vector<std::int64_t> mobius_from_bottom_vector(const IndexedInterval& ii) {
    std::size_t n = ii.graphs.size();
    auto above = upward_closure(ii);
    std::vector<int> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return ii.ranks[a] < ii.ranks[b]; });
    std::vector<std::int64_t> mu(n, 0);
    int b = ii.bottom_index;
    for (int e : order) {
        if (e == b) {
            mu[e] = 1;
            continue;
        }
        std::int64_t total = 0;
        for (std::size_t z = 0; z < n; ++z) {
            if (static_cast<int>(z) == e) continue;
            bool z_below_e = (above[z][e / 64] >> (e % 64)) & 1;
            if (z_below_e) total = checked_add(total, mu[z]);
        }
        mu[e] = checked_neg(total);
    }
    return mu;
}

}  // namespace

Interval build_interval(const Graph& h, const Graph& g, bool connected_variant) {
    IndexedInterval ii = build_indexed(h, g, connected_variant);
    std::vector<std::int64_t> mu = mobius_from_bottom_vector(ii);
    Interval iv;
    iv.bottom = ii.codes[ii.bottom_index];
    iv.top = ii.codes[ii.top_index];
    iv.connected_variant = connected_variant;
    for (std::size_t i = 0; i < ii.graphs.size(); ++i) {
        iv.elements.emplace(ii.codes[i], IntervalElement{ii.graphs[i], ii.ranks[i], mu[i]});
    }
    for (std::size_t upper = 0; upper < ii.covers_down.size(); ++upper) {
        for (int lower : ii.covers_down[upper]) {
            iv.hasse_edges.emplace(ii.codes[lower], ii.codes[upper]);
        }
    }
    return iv;
}

std::int64_t mobius(const Graph& h, const Graph& g) {
    if (h.order > g.order || !contains_induced(h, g)) return 0;
    Interval iv = build_interval(h, g, false);
    return iv.elements.at(iv.top).mobius_from_bottom;
}

std::int64_t mobius_connected(const Graph& h, const Graph& g) {
    if (!is_connected(h) || !is_connected(g)) {
        throw std::invalid_argument("mobius_connected: endpoints must be connected");
    }
    if (h.order > g.order || !contains_induced(h, g)) return 0;
    Interval iv = build_interval(h, g, true);
    return iv.elements.at(iv.top).mobius_from_bottom;
}

std::vector<int> rank_sequence(const Interval& iv) {
    int top_rank = iv.elements.at(iv.top).rank;
    std::vector<int> seq(top_rank + 1, 0);
    for (const auto& [code, element] : iv.elements) ++seq[element.rank];
    return seq;
}

bool is_unimodal(const std::vector<int>& seq) {
    std::size_t i = 1;
    while (i < seq.size() && seq[i - 1] <= seq[i]) ++i;
    while (i < seq.size() && seq[i - 1] >= seq[i]) ++i;
    return i == seq.size();
}

std::vector<CanonicalCode> coatoms(const Interval& iv) {
    int top_rank = iv.elements.at(iv.top).rank;
    if (top_rank < 1) throw std::invalid_argument("coatoms: interval rank must be at least 1");
    std::vector<CanonicalCode> result;
    for (const auto& [code, element] : iv.elements) {
        if (element.rank == top_rank - 1) result.push_back(code);
    }
    return result;
}

CoatomUniqueness coatom_unique(const Interval& iv) {
    int top_rank = iv.elements.at(iv.top).rank;
    if (top_rank <= 1) return CoatomUniqueness::not_applicable;
    return coatoms(iv).size() == 1 ? CoatomUniqueness::unique : CoatomUniqueness::multiple;
}

bool interior_disconnected(const Interval& iv) {
    int top_rank = iv.elements.at(iv.top).rank;
    std::vector<CanonicalCode> interior;
    for (const auto& [code, element] : iv.elements) {
        if (element.rank > 0 && element.rank < top_rank) interior.push_back(code);
    }
    if (interior.size() < 2) return false;
    std::map<CanonicalCode, int> index_of;
    for (std::size_t i = 0; i < interior.size(); ++i) index_of.emplace(interior[i], static_cast<int>(i));
    // Union-find over Hasse edges restricted to the interior; comparability
    // components coincide with Hasse-connectivity components there.
    std::vector<int> parent(interior.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [lower, upper] : iv.hasse_edges) {
        auto lo = index_of.find(lower);
        auto hi = index_of.find(upper);
        if (lo == index_of.end() || hi == index_of.end()) continue;
        parent[find(lo->second)] = find(hi->second);
    }
    int root = find(0);
    for (std::size_t i = 1; i < interior.size(); ++i) {
        if (find(static_cast<int>(i)) != root) return true;
    }
    return false;
}

bool is_nontrivial(const Interval& iv) {
    return iv.elements.at(iv.top).rank >= 3;
}

}  // namespace gposet
