#include "gposet/canonical.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace gposet {

namespace {

std::atomic<int> g_order_bound{10};

std::shared_mutex g_cache_mutex;
std::unordered_map<std::string, std::string> g_cache;

std::string labelled_bytes(const Graph& g) {
    std::string bytes;
    bytes.reserve(1 + static_cast<std::size_t>(g.order) * (g.order + 1) / 2);
    bytes.push_back(static_cast<char>(g.order));
    for (int i = 0; i < g.order; ++i) {
        for (int j = 0; j <= i; ++j) bytes.push_back(static_cast<char>(g.adj[i][j]));
    }
    return bytes;
}

struct CanonicalSearch {
    const Graph& g;
    // class_at_position[k] = degree-class id that position k must draw from
    std::vector<int> class_at_position;
    std::vector<int> class_of_vertex;
    std::vector<int> perm;
    std::vector<char> used;
    std::string current;
    std::string best;
    bool have_best = false;

    explicit CanonicalSearch(const Graph& graph) : g(graph) {}

    void run() {
        int n = g.order;
        std::vector<int> degrees(n, 0);
        for (int v = 0; v < n; ++v) {
            for (int u = 0; u < n; ++u) degrees[v] += (u == v) ? 2 * g.adj[v][v] : g.adj[v][u];
        }
        std::vector<int> sorted_degrees = degrees;
        std::sort(sorted_degrees.begin(), sorted_degrees.end());
        std::map<int, int> class_id;
        for (int d : sorted_degrees) class_id.emplace(d, static_cast<int>(class_id.size()));
        class_of_vertex.resize(n);
        for (int v = 0; v < n; ++v) class_of_vertex[v] = class_id[degrees[v]];
        class_at_position.resize(n);
        for (int k = 0; k < n; ++k) class_at_position[k] = class_id[sorted_degrees[k]];

        perm.assign(n, -1);
        used.assign(n, 0);
        current.clear();
        current.push_back(static_cast<char>(n));
        descend(0, true);
    }

    // `tight` records whether the current prefix still equals the
    // incumbent's prefix; pruning is only sound while it does.
    void descend(int k, bool tight) {
        int n = g.order;
        if (k == n) {
            if (!have_best || current < best) {
                best = current;
                have_best = true;
            }
            return;
        }
        // Row k depends only on perm[0..k], so the minimal feasible row can
        // be picked before recursing; ties are all explored.
        std::string min_row;
        std::vector<int> tied;
        for (int v = 0; v < n; ++v) {
            if (used[v] || class_of_vertex[v] != class_at_position[k]) continue;
            std::string row;
            row.reserve(k + 1);
            for (int j = 0; j < k; ++j) row.push_back(static_cast<char>(g.adj[v][perm[j]]));
            row.push_back(static_cast<char>(g.adj[v][v]));
            if (tied.empty() || row < min_row) {
                min_row = std::move(row);
                tied.assign(1, v);
            } else if (row == min_row) {
                tied.push_back(v);
            }
        }
        std::size_t offset = current.size();
        bool child_tight = tight;
        if (tight && have_best) {
            int cmp = min_row.compare(0, min_row.size(), best, offset, min_row.size());
            if (cmp > 0) return;
            child_tight = (cmp == 0);
        }
        current += min_row;
        for (int v : tied) {
            used[v] = 1;
            perm[k] = v;
            descend(k + 1, child_tight);
            used[v] = 0;
        }
        current.resize(offset);
    }
};

bool extends_to_isomorphism(const Graph& g, const Graph& h, std::vector<int>& image,
                            std::vector<char>& used, int k) {
    if (k == g.order) return true;
    for (int cand = 0; cand < h.order; ++cand) {
        if (used[cand]) continue;
        bool ok = (g.adj[k][k] == h.adj[cand][cand]);
        for (int j = 0; j < k && ok; ++j) ok = (g.adj[k][j] == h.adj[cand][image[j]]);
        if (!ok) continue;
        image[k] = cand;
        used[cand] = 1;
        if (extends_to_isomorphism(g, h, image, used, k + 1)) return true;
        used[cand] = 0;
    }
    return false;
}

bool automorphism_maps(const Graph& g, int from, int to) {
    std::vector<int> image(g.order, -1);
    std::vector<char> used(g.order, 0);
    image[0] = to;
    used[to] = 1;
    // Vertex `from` is forced first by relabelling it to position 0.
    std::vector<int> order(g.order);
    order[0] = from;
    int next = 1;
    for (int v = 0; v < g.order; ++v) {
        if (v != from) order[next++] = v;
    }
    Graph relabelled = Graph::with_order(g.order);
    for (int i = 0; i < g.order; ++i) {
        for (int j = 0; j < g.order; ++j) relabelled.adj[i][j] = g.adj[order[i]][order[j]];
    }
    return extends_to_isomorphism(relabelled, g, image, used, 1);
}

}  // namespace

std::string to_hex(const CanonicalCode& code) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(code.bytes.size() * 2);
    for (unsigned char byte : code.bytes) {
        out.push_back(digits[byte >> 4]);
        out.push_back(digits[byte & 15]);
    }
    return out;
}

int canonical_order_bound() { return g_order_bound.load(); }

void set_canonical_order_bound(int bound) {
    if (bound < 0 || bound > 120) throw std::invalid_argument("set_canonical_order_bound: bound out of range");
    g_order_bound.store(bound);
}

CanonicalCode canonical_form(const Graph& g) {
    if (g.order > canonical_order_bound()) {
        throw std::invalid_argument("canonical_form: order " + std::to_string(g.order) +
                                    " exceeds configured bound " + std::to_string(canonical_order_bound()));
    }
    std::string key = labelled_bytes(g);
    {
        std::shared_lock lock(g_cache_mutex);
        auto it = g_cache.find(key);
        if (it != g_cache.end()) return CanonicalCode{it->second};
    }
    CanonicalSearch search(g);
    search.run();
    std::string code = search.best;
    {
        std::unique_lock lock(g_cache_mutex);
        g_cache.emplace(std::move(key), code);
    }
    return CanonicalCode{code};
}

Graph graph_from_code(const CanonicalCode& code) {
    if (code.bytes.empty()) throw std::invalid_argument("graph_from_code: empty byte string");
    int n = static_cast<unsigned char>(code.bytes[0]);
    std::size_t expected = 1 + static_cast<std::size_t>(n) * (n + 1) / 2;
    if (code.bytes.size() != expected) {
        throw std::invalid_argument("graph_from_code: byte string length does not match order");
    }
    Graph g = Graph::with_order(n);
    std::size_t pos = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            int multiplicity = static_cast<unsigned char>(code.bytes[pos++]);
            if (multiplicity > 0) g.add_edge(i, j, multiplicity);
        }
    }
    return g;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order != h.order) return false;
    return canonical_form(g) == canonical_form(h);
}

OccurrenceSet occurrences(const Graph& h, const Graph& g) {
    if (h.order > g.order) return OccurrenceSet{g.order, {}};
    OccurrenceSet result;
    result.host_order = g.order;
    CanonicalCode target = canonical_form(h);
    std::vector<int> subset(h.order);
    for (int i = 0; i < h.order; ++i) subset[i] = i;
    if (h.order == 0) {
        result.occurrences.push_back({});
        return result;
    }
    while (true) {
        if (canonical_form(induced_subgraph(g, subset)) == target) {
            result.occurrences.push_back(subset);
        }
        // Advance the sorted-combination cursor.
        int pos = h.order - 1;
        while (pos >= 0 && subset[pos] == g.order - h.order + pos) --pos;
        if (pos < 0) break;
        ++subset[pos];
        for (int q = pos + 1; q < h.order; ++q) subset[q] = subset[q - 1] + 1;
    }
    return result;
}

bool contains_induced(const Graph& h, const Graph& g) {
    return !occurrences(h, g).occurrences.empty();
}

bool is_vertex_transitive(const Graph& g) {
    if (g.order <= 1) return true;
    CanonicalCode first = canonical_form(delete_vertex(g, 0));
    for (int v = 1; v < g.order; ++v) {
        if (canonical_form(delete_vertex(g, v)) != first) return false;
    }
    return true;
}

bool is_isomorphic_bruteforce(const Graph& g, const Graph& h) {
    if (g.order != h.order) return false;
    std::vector<int> image(g.order, -1);
    std::vector<char> used(g.order, 0);
    return extends_to_isomorphism(g, h, image, used, 0);
}

bool is_vertex_transitive_orbit_bruteforce(const Graph& g) {
    for (int v = 1; v < g.order; ++v) {
        if (!automorphism_maps(g, 0, v)) return false;
    }
    return true;
}

void clear_canonical_cache() {
    std::unique_lock lock(g_cache_mutex);
    g_cache.clear();
}

}  // namespace gposet
