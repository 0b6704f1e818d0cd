#include "gposet/split.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "gposet/canonical.hpp"
#include "gposet/interval.hpp"

namespace gposet {

namespace {

// Occurrences as vertex bitmasks plus, per occurrence, the canonical codes
// of all one-vertex extensions keyed by code with a representative vertex.
struct OccurrenceData {
    std::vector<std::vector<int>> sets;
    std::vector<std::uint64_t> masks;
    std::vector<std::map<CanonicalCode, int>> extension_codes;
    std::uint64_t full_mask = 0;
};

OccurrenceData collect_occurrences(const Graph& h, const Graph& g) {
    if (g.order > 63) throw std::invalid_argument("split_classify: host order above 63 unsupported");
    OccurrenceSet occ = occurrences(h, g);
    if (occ.occurrences.empty()) {
        throw std::invalid_argument("split_classify: bottom is not an induced subgraph of top");
    }
    OccurrenceData data;
    data.sets = occ.occurrences;
    data.full_mask = (g.order == 0) ? 0 : ((std::uint64_t{1} << g.order) - 1);
    for (const auto& set : data.sets) {
        std::uint64_t mask = 0;
        for (int v : set) mask |= std::uint64_t{1} << v;
        data.masks.push_back(mask);
        std::map<CanonicalCode, int> codes;
        for (int i = 0; i < g.order; ++i) {
            if ((mask >> i) & 1) continue;
            std::vector<int> extended = set;
            extended.push_back(i);
            codes.emplace(canonical_form(induced_subgraph(g, extended)), i);
        }
        data.extension_codes.push_back(std::move(codes));
    }
    return data;
}

bool z_sets_intersect(const OccurrenceData& data, std::size_t a, std::size_t b) {
    std::uint64_t z_a = data.full_mask & ~data.masks[a];
    std::uint64_t z_b = data.full_mask & ~data.masks[b];
    return (z_a & z_b) != 0;
}

bool extensions_intersect(const OccurrenceData& data, std::size_t a, std::size_t b, int* i_out = nullptr,
                          int* j_out = nullptr) {
    const auto& codes_a = data.extension_codes[a];
    const auto& codes_b = data.extension_codes[b];
    for (const auto& [code, i] : codes_a) {
        auto it = codes_b.find(code);
        if (it != codes_b.end()) {
            if (i_out) *i_out = i;
            if (j_out) *j_out = it->second;
            return true;
        }
    }
    return false;
}

// Connected components under an edge predicate; returns component ids.
template <typename EdgeFn>
std::vector<int> components(std::size_t n, EdgeFn edge) {
    std::vector<int> comp(n, -1);
    int next = 0;
    for (std::size_t start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        comp[start] = next;
        std::vector<std::size_t> stack{start};
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            for (std::size_t y = 0; y < n; ++y) {
                if (comp[y] >= 0 || !edge(x, y)) continue;
                comp[y] = next;
                stack.push_back(y);
            }
        }
        ++next;
    }
    return comp;
}

std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>> partition_by_component(
    const OccurrenceData& data, const std::vector<int>& comp) {
    std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>> parts;
    for (std::size_t x = 0; x < data.sets.size(); ++x) {
        (comp[x] == 0 ? parts.first : parts.second).push_back(data.sets[x]);
    }
    return parts;
}

}  // namespace

SplitReport split_classify(const Graph& h, const Graph& g) {
    OccurrenceData data = collect_occurrences(h, g);
    std::size_t n = data.sets.size();

    auto strong_edge = [&](std::size_t a, std::size_t b) {
        return a != b && (z_sets_intersect(data, a, b) || extensions_intersect(data, a, b));
    };
    std::vector<int> strong_comp = components(n, strong_edge);

    SplitReport report;
    if (*std::max_element(strong_comp.begin(), strong_comp.end()) > 0) {
        report.status = SplitStatus::strongly_zero_split;
        report.partition = partition_by_component(data, strong_comp);
        return report;
    }

    auto z_edge = [&](std::size_t a, std::size_t b) { return a != b && z_sets_intersect(data, a, b); };
    std::vector<int> z_comp = components(n, z_edge);
    if (*std::max_element(z_comp.begin(), z_comp.end()) == 0) {
        report.status = SplitStatus::not_zero_split;
        return report;
    }

    report.status = SplitStatus::zero_split_only;
    report.partition = partition_by_component(data, z_comp);
    // The strong constraint graph is connected while the Z graph is not, so
    // an extension edge joins two Z components; it defeats the split.
    for (std::size_t a = 0; a < n && !report.witness; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (z_comp[a] == z_comp[b]) continue;
            int i = -1;
            int j = -1;
            if (extensions_intersect(data, a, b, &i, &j)) {
                report.witness = SplitWitness{data.sets[a], data.sets[b], i, j};
                break;
            }
        }
    }
    return report;
}

SplitReport split_classify_bruteforce(const Graph& h, const Graph& g) {
    OccurrenceData data = collect_occurrences(h, g);
    std::size_t n = data.sets.size();
    if (n > 20) throw std::invalid_argument("split_classify_bruteforce: occurrence set too large");

    std::vector<std::vector<char>> z_pair(n, std::vector<char>(n, 0));
    std::vector<std::vector<char>> ext_pair(n, std::vector<char>(n, 0));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            z_pair[a][b] = z_pair[b][a] = z_sets_intersect(data, a, b);
            ext_pair[a][b] = ext_pair[b][a] = extensions_intersect(data, a, b);
        }
    }

    SplitReport report;
    std::uint32_t zero_split_mask = 0;
    // Occurrence 0 stays on the A side, halving the enumeration.
    std::uint32_t limit = (n == 0) ? 0 : (std::uint32_t{1} << (n - 1));
    for (std::uint32_t half = 1; half < limit; ++half) {
        std::uint32_t b_mask = half << 1;
        bool zero = true;
        bool strong = true;
        for (std::size_t a = 0; a < n && zero; ++a) {
            if ((b_mask >> a) & 1) continue;
            for (std::size_t b = 1; b < n; ++b) {
                if (!((b_mask >> b) & 1)) continue;
                if (z_pair[a][b]) {
                    zero = false;
                    break;
                }
                if (ext_pair[a][b]) strong = false;
            }
        }
        if (!zero) continue;
        if (zero_split_mask == 0) zero_split_mask = b_mask;
        if (strong) {
            report.status = SplitStatus::strongly_zero_split;
            std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>> parts;
            for (std::size_t x = 0; x < n; ++x) {
                (((b_mask >> x) & 1) ? parts.second : parts.first).push_back(data.sets[x]);
            }
            report.partition = parts;
            return report;
        }
    }
    if (zero_split_mask == 0) {
        report.status = SplitStatus::not_zero_split;
        return report;
    }
    report.status = SplitStatus::zero_split_only;
    std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>> parts;
    for (std::size_t x = 0; x < n; ++x) {
        (((zero_split_mask >> x) & 1) ? parts.second : parts.first).push_back(data.sets[x]);
    }
    report.partition = parts;
    for (std::size_t a = 0; a < n && !report.witness; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            bool cross = ((zero_split_mask >> a) & 1) != ((zero_split_mask >> b) & 1);
            if (!cross || !ext_pair[a][b]) continue;
            int i = -1;
            int j = -1;
            extensions_intersect(data, a, b, &i, &j);
            report.witness = SplitWitness{data.sets[a], data.sets[b], i, j};
            break;
        }
    }
    return report;
}

bool verify_disconnection_theorem(const Graph& h, const Graph& g) {
    if (g.order - h.order <= 2) {
        throw std::invalid_argument("verify_disconnection_theorem: requires |g| - |h| > 2");
    }
    bool disconnected = interior_disconnected(build_interval(h, g, false));
    bool strong = split_classify(h, g).status == SplitStatus::strongly_zero_split;
    return disconnected == strong;
}

}  // namespace gposet
