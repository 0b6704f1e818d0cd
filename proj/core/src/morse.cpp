#include "gposet/morse.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "gposet/interval.hpp"

namespace gposet {

namespace {

constexpr std::array<Operation, 9> k_operations{{
    {5, 2, 2},
    {4, 2, 1},
    {3, 2, 0},
    {5, 4, 0},
    {5, 3, 1},
    {4, 3, 0},
    {3, 1, 1},
    {1, 0, 0},
    {2, 1, 0},
}};

// Multisets with parts <= 5 pack into 30 bits: six bits of multiplicity
// per part size. All chain search runs on this encoding.
constexpr int shift_for(int part) { return 6 * (part - 1); }

std::uint32_t encode5(const PathMultiset& m) {
    if (m.total() > 63) {
        throw std::invalid_argument("path multiset too large for the chain engine (total above 63)");
    }
    std::uint32_t enc = 0;
    for (int p : m.parts) {
        if (p > 5) {
            throw std::invalid_argument(
                "parts above 5 are outside the nine-operation order; use the direct recursion instead");
        }
        enc += std::uint32_t{1} << shift_for(p);
    }
    return enc;
}

PathMultiset decode5(std::uint32_t enc) {
    std::vector<int> parts;
    for (int p = 5; p >= 1; --p) {
        std::uint32_t count = (enc >> shift_for(p)) & 63;
        for (std::uint32_t c = 0; c < count; ++c) parts.push_back(p);
    }
    return PathMultiset{std::move(parts)};
}

int count_of(std::uint32_t enc, int part) { return static_cast<int>((enc >> shift_for(part)) & 63); }

std::uint32_t apply_encoded(std::uint32_t enc, int op_index) {
    const Operation& op = k_operations[op_index];
    std::uint32_t out = enc - (std::uint32_t{1} << shift_for(op.domain_u));
    if (op.w1 > 0) out += std::uint32_t{1} << shift_for(op.w1);
    if (op.w2 > 0) out += std::uint32_t{1} << shift_for(op.w2);
    return out;
}

struct MorseCache {
    std::unordered_map<std::uint64_t, int> first_op;  // (state, target) -> op index
    std::unordered_map<std::uint64_t, bool> leq;      // (host, sub) -> sub <= host
};

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) { return (std::uint64_t{a} << 30) | b; }

bool encoded_leq(std::uint32_t sub, std::uint32_t host, MorseCache& cache) {
    if (sub == host) return true;
    std::uint64_t key = pair_key(host, sub);
    auto it = cache.leq.find(key);
    if (it != cache.leq.end()) return it->second;
    bool result = packing_contains(decode5(sub), decode5(host));
    cache.leq.emplace(key, result);
    return result;
}

// First operation of the lexicographically least path from state down to
// target: the least operation whose result still lies above target.
int lexmin_first(std::uint32_t state, std::uint32_t target, MorseCache& cache) {
    std::uint64_t key = pair_key(state, target);
    auto it = cache.first_op.find(key);
    if (it != cache.first_op.end()) return it->second;
    int found = -1;
    for (int idx = 0; idx < 9; ++idx) {
        if (count_of(state, k_operations[idx].domain_u) == 0) continue;
        if (encoded_leq(target, apply_encoded(state, idx), cache)) {
            found = idx;
            break;
        }
    }
    if (found < 0) throw std::logic_error("lexmin_first: no feasible operation");
    cache.first_op.emplace(key, found);
    return found;
}

// Truncation of a staircase of interior ranges into disjoint J-ranges.
// Emits J ranges in increasing start order via the callback; the callback
// may stop the walk early by returning false.
template <typename Emit>
void truncate_ranges(std::vector<std::pair<int, int>> ranges, Emit emit) {
    while (!ranges.empty()) {
        std::pair<int, int> j = ranges.front();
        if (!emit(j)) return;
        std::vector<std::pair<int, int>> rest;
        for (std::size_t t = 1; t < ranges.size(); ++t) {
            rest.emplace_back(std::max(ranges[t].first, j.second + 1), ranges[t].second);
        }
        // Keep only ranges containing no other range; truncation can make
        // a formerly minimal range swallow a later one.
        std::vector<std::pair<int, int>> minimal;
        for (std::size_t a = 0; a < rest.size(); ++a) {
            bool contains_other = false;
            for (std::size_t b = 0; b < rest.size() && !contains_other; ++b) {
                if (a == b) continue;
                contains_other = rest[a].first <= rest[b].first && rest[b].second <= rest[a].second;
            }
            if (!contains_other) minimal.push_back(rest[a]);
        }
        ranges = std::move(minimal);
    }
}

struct MorseDfs {
    // Configuration.
    bool restrict_to_bottom = false;
    std::uint32_t bottom_enc = 0;
    bool collect_chains = false;
    bool criticality_everywhere = false;
    std::size_t chain_cap = default_chain_cap;
    std::uint64_t node_cap = default_node_cap;
    const std::function<void(const OperationChain&, std::pair<int, int>)>* on_msi = nullptr;

    // Chain state.
    MorseCache cache;
    std::vector<std::uint32_t> enc;
    std::vector<int> op_idx;
    std::vector<std::pair<int, int>> msi;

    // Outputs.
    std::uint64_t nodes = 0;
    std::uint64_t msi_count = 0;
    bool flag_msi_ends_2_10 = false;
    bool flag_msi_from_5_40_big = false;
    std::unordered_map<std::uint32_t, std::int64_t> critical;
    std::vector<OperationChain> chains;

    OperationChain current_chain() const {
        OperationChain chain;
        for (std::uint32_t e : enc) chain.states.push_back(decode5(e));
        for (int idx : op_idx) chain.ops.push_back(k_operations[idx]);
        return chain;
    }

    bool mismatch(int j, int k) { return op_idx[j] != lexmin_first(enc[j], enc[k], cache); }

    // Contribution of the length-k prefix, read as a maximal chain of the
    // interval it spans: 0 when the J-ranges leave part of the interior
    // 1 .. k-1 uncovered (not critical), otherwise (-1)^(|J|+1), the
    // reduced Euler characteristic of a critical cell of dimension
    // |J| - 1. When every J-interval has size 1 this equals (-1)^k, so
    // plain critical-chain counting recovers |mu| in that situation; with
    // larger J-intervals the signs can differ between chains and only the
    // signed sum equals mu.
    int critical_contribution(int k) {
        if (k == 0) return 1;  // the one-element interval: mu = 1
        std::vector<std::pair<int, int>> ranges;
        ranges.reserve(msi.size());
        for (const auto& [s, e] : msi) ranges.emplace_back(s + 1, e - 1);
        int cursor = 1;
        bool gap = false;
        int j_count = 0;
        truncate_ranges(std::move(ranges), [&](std::pair<int, int> j) {
            if (j.first > cursor) {
                gap = true;
                return false;
            }
            ++j_count;
            cursor = j.second + 1;
            return true;
        });
        if (gap || cursor <= k - 1) return 0;
        return j_count % 2 == 1 ? 1 : -1;
    }

    void visit() {
        if (++nodes > node_cap) throw std::runtime_error("chain sweep exceeded its node cap");
        int k = static_cast<int>(op_idx.size());
        bool pushed_msi = false;
        if (k >= 2) {
            // New skipped segments all end at k; the inclusion-minimal one
            // starts at the last mismatch, and it is a new MSI only when
            // it starts after every recorded MSI (staircase order).
            int start_floor = msi.empty() ? -1 : msi.back().first;
            for (int j = k - 2; j > start_floor; --j) {
                if (!mismatch(j, k)) continue;
                msi.emplace_back(j, k);
                pushed_msi = true;
                ++msi_count;
                if (op_idx[k - 1] == 8) flag_msi_ends_2_10 = true;
                if (op_idx[j] == 3 && k - j - 1 > 1) flag_msi_from_5_40_big = true;
                if (on_msi && *on_msi) (*on_msi)(current_chain(), {j, k});
                break;
            }
        }
        bool at_bottom = restrict_to_bottom && enc[k] == bottom_enc;
        if (collect_chains && at_bottom) {
            if (chains.size() >= chain_cap) throw std::runtime_error("chain enumeration exceeded its cap");
            chains.push_back(current_chain());
        }
        if (criticality_everywhere || at_bottom) critical[enc[k]] += critical_contribution(k);

        for (int idx = 0; idx < 9; ++idx) {
            if (count_of(enc[k], k_operations[idx].domain_u) == 0) continue;
            std::uint32_t child = apply_encoded(enc[k], idx);
            if (restrict_to_bottom && !encoded_leq(bottom_enc, child, cache)) continue;
            enc.push_back(child);
            op_idx.push_back(idx);
            visit();
            enc.pop_back();
            op_idx.pop_back();
        }
        if (pushed_msi) msi.pop_back();
    }

    void run(const PathMultiset& top) {
        enc.push_back(encode5(top));
        visit();
        enc.pop_back();
    }
};

}  // namespace

const std::array<Operation, 9>& all_operations() { return k_operations; }

int operation_index(const Operation& op) {
    for (int idx = 0; idx < 9; ++idx) {
        if (k_operations[idx] == op) return idx;
    }
    throw std::invalid_argument("operation_index: not one of the nine operations on parts <= 5");
}

std::strong_ordering operation_order(const Operation& a, const Operation& b) {
    return operation_index(a) <=> operation_index(b);
}

std::string operation_to_string(const Operation& op) {
    std::string out = std::to_string(op.domain_u) + "→";
    if (op.w1 > 0) out += std::to_string(op.w1);
    if (op.w2 > 0) out += std::to_string(op.w2);
    if (op.w1 == 0 && op.w2 == 0) out += "0";
    return out;
}

PathMultiset apply_operation(const PathMultiset& m, const Operation& op) {
    if (op.w1 < op.w2 || op.w2 < 0 || op.w1 + op.w2 != op.domain_u - 1) {
        throw std::invalid_argument("apply_operation: malformed operation");
    }
    if (m.count(op.domain_u) == 0) {
        throw std::invalid_argument("apply_operation: domain part absent from the multiset");
    }
    std::vector<int> parts;
    parts.reserve(m.parts.size() + 1);
    bool removed = false;
    for (int p : m.parts) {
        if (!removed && p == op.domain_u) {
            removed = true;
            continue;
        }
        parts.push_back(p);
    }
    if (op.w1 > 0) parts.push_back(op.w1);
    if (op.w2 > 0) parts.push_back(op.w2);
    return PathMultiset::of(std::move(parts));
}

std::vector<OperationChain> enumerate_maximal_chains(const PathMultiset& top, const PathMultiset& bottom,
                                                     std::size_t chain_cap) {
    encode5(top);
    std::uint32_t bottom_enc = encode5(bottom);
    if (!packing_contains(bottom, top)) {
        throw std::invalid_argument("enumerate_maximal_chains: bottom is not below top");
    }
    MorseDfs dfs;
    dfs.restrict_to_bottom = true;
    dfs.bottom_enc = bottom_enc;
    dfs.collect_chains = true;
    dfs.chain_cap = chain_cap;
    dfs.run(top);
    return std::move(dfs.chains);
}

MorseRecord skipped_intervals(const OperationChain& chain) {
    if (chain.states.size() != chain.ops.size() + 1) {
        throw std::invalid_argument("skipped_intervals: chain states and operations disagree");
    }
    MorseRecord rec;
    rec.chain = chain;
    std::vector<std::uint32_t> enc;
    for (std::size_t k = 0; k < chain.states.size(); ++k) {
        enc.push_back(encode5(chain.states[k]));
        if (k > 0 && apply_operation(chain.states[k - 1], chain.ops[k - 1]) != chain.states[k]) {
            throw std::invalid_argument("skipped_intervals: chain step does not apply its operation");
        }
    }
    std::vector<int> op_idx;
    for (const Operation& op : chain.ops) op_idx.push_back(operation_index(op));

    MorseCache cache;
    for (int k = 2; k <= static_cast<int>(op_idx.size()); ++k) {
        int start_floor = rec.msis.empty() ? -1 : rec.msis.back().first;
        for (int j = k - 2; j > start_floor; --j) {
            if (op_idx[j] == lexmin_first(enc[j], enc[k], cache)) continue;
            rec.msis.emplace_back(j, k);
            break;
        }
    }
    return rec;
}

void compute_j_intervals(MorseRecord& rec) {
    rec.j_intervals.clear();
    std::vector<std::pair<int, int>> ranges;
    for (const auto& [s, e] : rec.msis) ranges.emplace_back(s + 1, e - 1);
    int cursor = 1;
    bool gap = false;
    truncate_ranges(std::move(ranges), [&](std::pair<int, int> j) {
        rec.j_intervals.emplace_back(j.first - 1, j.second + 1);
        if (j.first > cursor) gap = true;
        cursor = std::max(cursor, j.second + 1);
        return true;
    });
    rec.is_critical = !gap && cursor > rec.chain.rank() - 1;
}

std::int64_t mobius_via_morse(const PathMultiset& top, const PathMultiset& bottom, std::uint64_t node_cap) {
    std::uint32_t bottom_enc = encode5(bottom);
    encode5(top);
    if (!packing_contains(bottom, top)) return 0;
    MorseDfs dfs;
    dfs.restrict_to_bottom = true;
    dfs.bottom_enc = bottom_enc;
    dfs.node_cap = node_cap;
    dfs.run(top);
    return dfs.critical[bottom_enc];
}

MorseSweepResult morse_sweep(const PathMultiset& top, std::uint64_t node_cap,
                             const std::function<void(const OperationChain&, std::pair<int, int>)>& on_msi) {
    MorseDfs dfs;
    dfs.criticality_everywhere = true;
    dfs.node_cap = node_cap;
    if (on_msi) dfs.on_msi = &on_msi;
    dfs.run(top);
    MorseSweepResult result;
    result.top = top;
    for (const auto& [state, value] : dfs.critical) result.mobius[decode5(state)] = value;
    result.nodes = dfs.nodes;
    result.msi_count = dfs.msi_count;
    result.msi_ending_in_2_10_seen = dfs.flag_msi_ends_2_10;
    result.msi_from_5_40_above_size_one = dfs.flag_msi_from_5_40_big;
    return result;
}

std::int64_t dyck_critical_count(int n) {
    if (n < 1) throw std::invalid_argument("dyck_critical_count: n must be positive");
    // memo[u][d]: completions with u rising and d falling pairs left; a
    // falling pair may be placed only when strictly more rising pairs have
    // been used than falling ones, i.e. when d > u.
    std::vector<std::vector<std::int64_t>> memo(n + 1, std::vector<std::int64_t>(n + 1, -1));
    auto rec = [&](auto&& self, int u, int d) -> std::int64_t {
        if (u == 0 && d == 0) return 1;
        std::int64_t& slot = memo[u][d];
        if (slot >= 0) return slot;
        std::int64_t total = 0;
        if (u > 0) total = checked_add(total, self(self, u - 1, d));
        if (d > 0 && d > u) total = checked_add(total, self(self, u, d - 1));
        slot = total;
        return total;
    };
    return rec(rec, n, n);
}

Table1Cell table1_cell(const Operation& first, const Operation& second) {
    int first_index = operation_index(first);
    operation_index(second);
    Table1Cell cell;
    cell.first = first;
    cell.second = second;

    auto run_variant = [&](const PathMultiset& c0) {
        PathMultiset c1 = apply_operation(c0, first);
        if (c1.count(second.domain_u) == 0) return;
        PathMultiset c2 = apply_operation(c1, second);
        for (int idx = 0; idx < first_index; ++idx) {
            const Operation& earlier = k_operations[idx];
            if (c0.count(earlier.domain_u) == 0) continue;
            Table1Cell::Detour detour;
            detour.via = apply_operation(c0, earlier);
            detour.earlier_op = earlier;
            for (const Operation& rescue : k_operations) {
                if (detour.via.count(rescue.domain_u) == 0) continue;
                if (apply_operation(detour.via, rescue) == c2) {
                    detour.has_rescue = true;
                    detour.rescue = rescue;
                    break;
                }
            }
            if (detour.has_rescue) cell.has_size1_msi = true;
            cell.detours.push_back(std::move(detour));
        }
    };

    // The generic segment start holds both domains as separate parts; when
    // the second domain already appears in the first image, the first
    // domain alone is also a valid segment start.
    run_variant(PathMultiset::of({first.domain_u, second.domain_u}));
    if (second.domain_u == first.w1 || second.domain_u == first.w2) {
        run_variant(PathMultiset::of({first.domain_u}));
    }
    return cell;
}

}  // namespace gposet
