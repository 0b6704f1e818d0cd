// Discrete Morse machinery on the dual path poset with parts at most 5.
//
// A maximal chain of a dual interval runs from the larger multiset down to
// the smaller, one vertex deletion per step; each step is one of nine
// operations u -> (w1, w2) with w1 + w2 = u - 1, and the fixed total order
//
//   5->(2,2) < 4->(2,1) < 3->(2,0) < 5->(4,0) < 5->(3,1)
//            < 4->(3,0) < 3->(1,1) < 1->(0,0) < 2->(1,0)
//
// induces a lexicographic order on chains (compared at the divergence
// point), which is a PL-ordering. A segment (c_i, c_j) of a chain is
// skipped when removing its interior leaves a subchain of a strictly
// earlier maximal chain; it suffices to compare the segment's operation
// word against the lexicographically least operation path from c_i to
// c_j, computed greedily (least feasible operation first) and memoized.
// Minimal skipped intervals form a staircase; the Babson-Hersh
// truncation turns them into disjoint J-intervals, and a chain is
// critical when the J-intervals cover its whole interior. Each critical
// chain carries one cell of dimension |J(C)| - 1, so the Mobius value of
// the interval is the sum of (-1)^(|J(C)|+1) over critical chains; when
// every J-interval has size 1 all cells share the top dimension and the
// plain critical-chain count gives |mu| with sign (-1)^rank. This module
// checks the signed sum against the direct recursion.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gposet/path_multiset.hpp"

namespace gposet {

struct Operation {
    int domain_u = 0;  // part consumed
    int w1 = 0;        // larger image part
    int w2 = 0;        // smaller image part; w1 + w2 = domain_u - 1

    bool operator==(const Operation&) const = default;
};

// The nine operations on parts <= 5, in the fixed total order.
const std::array<Operation, 9>& all_operations();

// Position of op in the fixed order; throws std::invalid_argument for
// operations outside the nine.
int operation_index(const Operation& op);
std::strong_ordering operation_order(const Operation& a, const Operation& b);

// "5→31", "4→3" (zero image parts dropped), "1→0" (empty image).
std::string operation_to_string(const Operation& op);

// Removes one copy of domain_u and inserts the nonzero image parts.
// Throws std::invalid_argument when the domain is absent or the image
// does not match the domain.
PathMultiset apply_operation(const PathMultiset& m, const Operation& op);

struct OperationChain {
    // states[0] is the larger end; states[k+1] = apply(states[k], ops[k]).
    std::vector<PathMultiset> states;
    std::vector<Operation> ops;

    int rank() const { return static_cast<int>(ops.size()); }
};

struct MorseRecord {
    OperationChain chain;
    // Segments (i, j), j >= i + 2, encoding the open interval between
    // states[i] and states[j]; interior indices are i+1 .. j-1. msis are
    // the inclusion-minimal skipped intervals sorted by start; size of an
    // MSI is j - i - 1.
    std::vector<std::pair<int, int>> msis;
    // Truncated J-intervals in the same encoding; their interiors are
    // pairwise disjoint.
    std::vector<std::pair<int, int>> j_intervals;
    bool is_critical = false;
};

inline constexpr std::size_t default_chain_cap = 1'000'000;
inline constexpr std::uint64_t default_node_cap = 400'000'000;

// Every maximal chain of the dual interval from top down to bottom, in
// the PL-order. Requires bottom <= top, all parts <= 5; throws on scope
// violations or when the cap is exceeded.
std::vector<OperationChain> enumerate_maximal_chains(const PathMultiset& top, const PathMultiset& bottom,
                                                     std::size_t chain_cap = default_chain_cap);

// Populates msis. The PL-order context is implicit: detection compares
// each segment against the lexicographically least operation path between
// its endpoints, which is equivalent to searching earlier chains.
MorseRecord skipped_intervals(const OperationChain& chain);

// Populates j_intervals and is_critical from rec.msis.
void compute_j_intervals(MorseRecord& rec);

// Discrete-Morse evaluation of mu*(top, bottom): each critical chain C
// contributes (-1)^(|J(C)|+1), the reduced Euler characteristic of a
// critical cell of dimension |J(C)| - 1. When every J-interval has size 1
// the contribution is (-1)^rank for all critical chains, so |mu| is the
// plain critical-chain count in that situation; intervals whose chains
// carry larger J-intervals can mix signs, and only the signed sum equals
// the Mobius value. Returns 0 when bottom is not below top.
std::int64_t mobius_via_morse(const PathMultiset& top, const PathMultiset& bottom,
                              std::uint64_t node_cap = default_node_cap);

// One depth-first sweep over every descending chain from top, evaluating
// criticality at every node; mobius[b] is then the signed critical-cell
// sum mu*(top, b) of the interval [b, top] for every b below top
// simultaneously, with the same accounting as mobius_via_morse.
struct MorseSweepResult {
    PathMultiset top;
    std::map<PathMultiset, std::int64_t> mobius;
    std::uint64_t nodes = 0;
    std::uint64_t msi_count = 0;
    // Structural flags over every MSI seen during the sweep.
    bool msi_ending_in_2_10_seen = false;     // a recorded MSI whose last operation is 2→10
    bool msi_from_5_40_above_size_one = false;  // an MSI starting with 5→40 with size > 1
};

// on_msi, when set, fires once per newly discovered MSI with the chain
// prefix that produced it.
MorseSweepResult morse_sweep(
    const PathMultiset& top, std::uint64_t node_cap = default_node_cap,
    const std::function<void(const OperationChain&, std::pair<int, int>)>& on_msi = nullptr);

// Critical chains of [1^n, 5^n] counted directly from their structural
// description: n pairs (5→31, 1→0) and n pairs (3→11, 1→0) interleaved so
// that every prefix has at least as many of the former; equals the n-th
// Catalan number without building the interval.
std::int64_t dyck_critical_count(int n);

// One cell of the size-1-MSI table: for consecutive operations (first,
// second), builds the canonical two-step segments, collects every element
// b reachable from the segment start by a single earlier operation, and
// searches for a rescue operation taking b to the segment end. A size-1
// MSI exists precisely when some rescue exists.
struct Table1Cell {
    Operation first;
    Operation second;
    // One entry per variant element b: the multiset reached by an earlier
    // operation, plus the rescue operation completing the detour, if any.
    struct Detour {
        PathMultiset via;
        Operation earlier_op;
        bool has_rescue = false;
        Operation rescue;
    };
    std::vector<Detour> detours;
    bool has_size1_msi = false;
};

Table1Cell table1_cell(const Operation& first, const Operation& second);

}  // namespace gposet
