// Closed-form Mobius evaluations for named interval families: vertex-
// transitive tops (complete, edgeless, cycle, balanced complete
// multipartite), the null-graph bottom rule, complete bipartite pairs,
// path-to-path intervals, two-path unions over an edgeless pair, the
// five-case formula for n equal paths over n isolated vertices, and the
// P4/P3 mixed column; plus the Catalan, Fibonacci, binomial and Schroder
// sequences they evaluate to. Every formula is an independent oracle
// checked against the Hasse recursion, never a replacement for it.
//
// Out-of-domain queries return no value rather than guessing; arithmetic
// is 64-bit with overflow reported via std::overflow_error.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gposet/graph.hpp"

namespace gposet {

// 0 when k < 0 or k > n; throws std::invalid_argument for n < 0.
std::int64_t binomial(int n, int k);
// Catalan numbers, C_0 = 1.
std::int64_t catalan(int n);
// Fibonacci numbers seeded F_0 = 0, F_1 = F_2 = 1.
std::int64_t fibonacci(int n);
// Schroder triangle T(n, k) = C(n,k) * C(n+k,k) / (k+1).
std::int64_t schroder_t(int n, int k);

enum class ClosedFormFamily {
    complete,
    empty_graph,
    cycle,
    null_bottom,
    complete_bipartite,
    multipartite,
    path_to_path,
    two_paths,
    n_paths_column,
    p4_p3_mix,
};

// A named family instance; parameter meaning is per family: complete n /
// empty_graph n / cycle n / multipartite {k, parts}.
struct ClosedForm {
    ClosedFormFamily family;
    std::vector<int> parameters;
};

// mu(null graph, g) = 1, -1, 0 for |g| = 0, 1, > 1; refuses loops.
std::int64_t mu_null_bottom(const Graph& g);

// Vertex-transitive top rule for the families complete, empty_graph,
// cycle and multipartite: 0 whenever |h| is not |top| - 1 or |top| (the
// vanishing region plus non-containment), no value otherwise. A null h
// falls through to the null-bottom rule instead.
std::optional<std::int64_t> mu_named_top(const Graph& h, const ClosedForm& top);

// mu(B_{a1,a2}, B_{b1,b2}), parts compared after sorting each pair in
// decreasing order: 1 when equal; -1 when the total grows by one; 1 when
// both parts grow by exactly one and a1 != a2; 0 otherwise. Throws on
// non-containment.
std::int64_t mu_complete_bipartite(int a1, int a2, int b1, int b2);

// mu(P_m, P_x) = (-1)^(x-m); throws when m < 1 or m > x.
std::int64_t mu_path_to_path(int m, int x);

// mu(2K_1, P_a u P_b) for a >= b > 1: (-1)^(a+b) F_b when a > b, and
// F_{a-2} when a = b. Throws when b <= 1-part cases apply.
std::int64_t mu_two_paths(int a, int b);

// mu(n K_1, n copies of P_x), the five-case formula; cases are tested in
// the order n=1, x in {1,3}, x=2, x=4, n=2, x=5, and anything else has
// no closed form.
std::optional<std::int64_t> mu_n_paths_column(int x, int n);

// mu((x+y) K_1, x copies of P_4 union y copies of P_3) = (-1)^x C(x+y, y);
// throws when x + y < 1.
std::int64_t mu_p4_p3_mix(int x, int y);

// Recognized closed form for a concrete pair, used for reporting next to
// the recursive value; no value when the pair is outside every family.
struct ClosedFormMatch {
    std::string description;
    std::int64_t value = 0;
};

std::optional<ClosedFormMatch> closed_form_prediction(const Graph& h, const Graph& g);

}  // namespace gposet
