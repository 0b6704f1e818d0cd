#include "gposet/path_multiset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "gposet/interval.hpp"

namespace gposet {

PathMultiset PathMultiset::of(std::vector<int> parts) {
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("PathMultiset: parts must be positive");
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return PathMultiset{std::move(parts)};
}

int PathMultiset::total() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

int PathMultiset::count(int u) const {
    return static_cast<int>(std::count(parts.begin(), parts.end(), u));
}

std::string PathMultiset::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(parts[i]);
    }
    out += "}";
    return out;
}

Graph to_graph(const PathMultiset& m) {
    Graph g = make_null();
    for (int p : m.parts) g = disjoint_union(g, make_path(p));
    return g;
}

std::optional<PathMultiset> multiset_from_graph(const Graph& g) {
    if (!g.is_simple()) return std::nullopt;
    std::vector<int> degree(g.order, 0);
    for (int v = 0; v < g.order; ++v) {
        for (int w = 0; w < g.order; ++w) {
            if (w != v && g.has_edge(v, w)) ++degree[v];
        }
        if (degree[v] > 2) return std::nullopt;
    }
    std::vector<int> parts;
    std::vector<char> seen(g.order, 0);
    for (int v = 0; v < g.order; ++v) {
        if (seen[v]) continue;
        // Flood the component, counting vertices and edge endpoints; a
        // component with max degree <= 2 is a path exactly when it is
        // acyclic, i.e. has one fewer edge than vertices.
        std::vector<int> stack{v};
        seen[v] = 1;
        int size = 0;
        int endpoint_sum = 0;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            ++size;
            endpoint_sum += degree[x];
            for (int w = 0; w < g.order; ++w) {
                if (w != x && g.has_edge(x, w) && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        if (endpoint_sum / 2 != size - 1) return std::nullopt;
        parts.push_back(size);
    }
    return PathMultiset::of(std::move(parts));
}

namespace {

// Backtracking part placement. remaining[b] is the unused capacity of host
// part b; placing a part into a non-empty host part costs one separator.
bool place(const std::vector<int>& parts, std::size_t next, std::vector<int>& remaining,
           const std::vector<char>& started, const std::vector<int>& host) {
    if (next == parts.size()) return true;
    int p = parts[next];
    for (std::size_t b = 0; b < remaining.size(); ++b) {
        // Equal host parts in equal states are interchangeable; try the
        // first of each run only.
        if (b > 0 && host[b] == host[b - 1] && remaining[b] == remaining[b - 1] &&
            started[b] == started[b - 1]) {
            continue;
        }
        int cost = p + (started[b] ? 1 : 0);
        if (cost > remaining[b]) continue;
        std::vector<int> next_remaining = remaining;
        std::vector<char> next_started(started);
        next_remaining[b] -= cost;
        next_started[b] = 1;
        if (place(parts, next + 1, next_remaining, next_started, host)) return true;
    }
    return false;
}

}  // namespace

bool packing_contains(const PathMultiset& sub, const PathMultiset& host) {
    if (sub.total() > host.total()) return false;
    if (sub.parts.empty()) return true;
    if (host.parts.empty()) return false;
    if (sub.parts.front() > host.parts.front()) return false;
    std::vector<int> remaining = host.parts;
    std::vector<char> started(host.parts.size(), 0);
    return place(sub.parts, 0, remaining, started, host.parts);
}

std::vector<PathMultiset> covers_below(const PathMultiset& m) {
    std::vector<PathMultiset> out;
    for (std::size_t i = 0; i < m.parts.size(); ++i) {
        if (i > 0 && m.parts[i] == m.parts[i - 1]) continue;
        int u = m.parts[i];
        std::vector<int> base;
        base.reserve(m.parts.size() + 1);
        for (std::size_t j = 0; j < m.parts.size(); ++j) {
            if (j != i) base.push_back(m.parts[j]);
        }
        for (int w1 = u - 1; 2 * w1 >= u - 1; --w1) {
            int w2 = u - 1 - w1;
            std::vector<int> parts = base;
            if (w1 > 0) parts.push_back(w1);
            if (w2 > 0) parts.push_back(w2);
            out.push_back(PathMultiset::of(std::move(parts)));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PathDownSet build_path_down_set(const PathMultiset& top) {
    std::map<PathMultiset, int> discovered;
    std::vector<PathMultiset> all;
    std::vector<std::pair<PathMultiset, PathMultiset>> cover_pairs;  // (lower, upper)
    discovered.emplace(top, 0);
    all.push_back(top);
    std::vector<PathMultiset> level{top};
    while (!level.empty() && level.front().total() > 0) {
        std::vector<PathMultiset> next;
        for (const PathMultiset& parent : level) {
            for (PathMultiset child : covers_below(parent)) {
                if (discovered.emplace(child, 0).second) {
                    all.push_back(child);
                    next.push_back(child);
                }
                cover_pairs.emplace_back(child, parent);
            }
        }
        level = std::move(next);
    }

    PathDownSet ds;
    std::sort(all.begin(), all.end(), [](const PathMultiset& a, const PathMultiset& b) {
        int ta = a.total();
        int tb = b.total();
        return ta != tb ? ta < tb : a < b;
    });
    ds.elements = std::move(all);
    for (std::size_t i = 0; i < ds.elements.size(); ++i) {
        ds.index_of[ds.elements[i]] = static_cast<int>(i);
    }
    std::size_t n = ds.elements.size();
    ds.covers_down.resize(n);
    ds.covers_up.resize(n);
    std::sort(cover_pairs.begin(), cover_pairs.end());
    cover_pairs.erase(std::unique(cover_pairs.begin(), cover_pairs.end()), cover_pairs.end());
    for (const auto& [lower, upper] : cover_pairs) {
        int lo = ds.index_of.at(lower);
        int hi = ds.index_of.at(upper);
        ds.covers_down[hi].push_back(lo);
        ds.covers_up[lo].push_back(hi);
    }
    ds.top_index = ds.index_of.at(top);

    std::size_t words = (n + 63) / 64;
    ds.above.assign(n, std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = n; i-- > 0;) {
        // Elements are sorted by total, so every cover target of i has a
        // larger index and is already closed.
        int x = static_cast<int>(i);
        ds.above[x][i / 64] |= std::uint64_t{1} << (i % 64);
        for (int up : ds.covers_up[x]) {
            for (std::size_t w = 0; w < words; ++w) ds.above[x][w] |= ds.above[up][w];
        }
    }

    ds.mobius_to_top.assign(n, 0);
    for (std::size_t i = n; i-- > 0;) {
        int x = static_cast<int>(i);
        if (x == ds.top_index) {
            ds.mobius_to_top[x] = 1;
            continue;
        }
        std::int64_t total = 0;
        for (std::size_t z = i + 1; z < n; ++z) {
            if (ds.leq(x, static_cast<int>(z))) total = checked_add(total, ds.mobius_to_top[z]);
        }
        ds.mobius_to_top[x] = checked_neg(total);
    }
    return ds;
}

std::int64_t path_mobius(const PathMultiset& bottom, const PathMultiset& top) {
    if (!packing_contains(bottom, top)) return 0;
    PathDownSet ds = build_path_down_set(top);
    return ds.mobius_to_top[ds.index_of.at(bottom)];
}

}  // namespace gposet
