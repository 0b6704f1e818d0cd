#include "gposet/census.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "gposet/canonical.hpp"
#include "gposet/enumerate.hpp"
#include "gposet/fixtures.hpp"
#include "gposet/formulas.hpp"
#include "gposet/graph.hpp"
#include "gposet/interval.hpp"
#include "gposet/io.hpp"
#include "gposet/path_multiset.hpp"

namespace gposet {

namespace {

// Rank counts of the interval [bottom h, top] read off a down-set of the
// top: element z belongs to the interval exactly when h <= z.
std::vector<int> interval_rank_counts(const DownSet& ds, int h) {
    int bottom_order = ds.graphs[static_cast<std::size_t>(h)].order;
    int top_order = ds.graphs[static_cast<std::size_t>(ds.top_index)].order;
    std::vector<int> counts(static_cast<std::size_t>(top_order - bottom_order) + 1, 0);
    for (std::size_t z = 0; z < ds.graphs.size(); ++z) {
        if (!ds.leq(h, static_cast<int>(z))) continue;
        ++counts[static_cast<std::size_t>(ds.graphs[z].order - bottom_order)];
    }
    return counts;
}

ConjectureCase make_case(std::string description, bool agrees) {
    ConjectureCase c;
    c.description = std::move(description);
    c.agrees = agrees;
    return c;
}

}  // namespace

std::string to_string(CensusConvention convention) {
    switch (convention) {
        case CensusConvention::include_equal:
            return "include-equal";
        case CensusConvention::exclude_equal:
            return "exclude-equal";
        case CensusConvention::exclude_trivial_ranks:
            return "exclude-trivial-ranks";
    }
    throw std::invalid_argument("unknown census convention");
}

bool ConjectureReport::all_agree() const {
    return agree_count() == cases.size();
}

std::size_t ConjectureReport::agree_count() const {
    std::size_t agreeing = 0;
    for (const ConjectureCase& c : cases) {
        if (c.agrees) ++agreeing;
    }
    return agreeing;
}

ZeroProportionResult zero_proportion(int max_order, CensusConvention convention, int jobs) {
    if (max_order < 1) throw std::invalid_argument("zero_proportion needs max_order >= 1");
    std::vector<Graph> tops;
    for (int n = 1; n <= max_order; ++n) {
        std::vector<Graph> level = all_graphs(n);
        tops.insert(tops.end(), level.begin(), level.end());
    }

    int worker_count = std::clamp(jobs, 1, static_cast<int>(tops.size()));
    std::vector<std::uint64_t> intervals(static_cast<std::size_t>(worker_count), 0);
    std::vector<std::uint64_t> zeros(static_cast<std::size_t>(worker_count), 0);
    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::exception_ptr failure;

    auto count_tops = [&](int worker) {
        for (;;) {
            std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= tops.size()) return;
            DownSet ds = build_down_set(tops[i]);
            int top_order = tops[i].order;
            for (std::size_t x = 0; x < ds.graphs.size(); ++x) {
                int bottom_order = ds.graphs[x].order;
                if (bottom_order == 0) continue;  // the null graph is not a census bottom
                if (convention == CensusConvention::exclude_equal && static_cast<int>(x) == ds.top_index)
                    continue;
                if (convention == CensusConvention::exclude_trivial_ranks && top_order - bottom_order < 2)
                    continue;
                ++intervals[static_cast<std::size_t>(worker)];
                if (ds.mobius_to_top[x] == 0) ++zeros[static_cast<std::size_t>(worker)];
            }
        }
    };
    auto guarded = [&](int worker) {
        try {
            count_tops(worker);
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next.store(tops.size(), std::memory_order_relaxed);
        }
    };

    if (worker_count == 1) {
        guarded(0);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(worker_count));
        for (int w = 0; w < worker_count; ++w) workers.emplace_back(guarded, w);
        for (std::thread& t : workers) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    ZeroProportionResult result;
    result.max_order = max_order;
    result.convention = convention;
    for (int w = 0; w < worker_count; ++w) {
        result.intervals += intervals[static_cast<std::size_t>(w)];
        result.zeros += zeros[static_cast<std::size_t>(w)];
    }
    return result;
}

ConjectureReport schroder_conjecture_scan(int max_n) {
    ConjectureReport report;
    report.name = "Schroder-triangle column";
    for (int n = 1; n <= max_n; ++n) {
        for (int x = 0; x <= n; ++x) {
            int y = n - x;
            std::vector<int> bottom_parts(static_cast<std::size_t>(n), 1);
            std::vector<int> top_parts(static_cast<std::size_t>(x), 5);
            top_parts.insert(top_parts.end(), static_cast<std::size_t>(y), 4);
            PathMultiset bottom = PathMultiset::of(std::move(bottom_parts));
            PathMultiset top = PathMultiset::of(std::move(top_parts));
            std::int64_t got = path_mobius(bottom, top);
            std::int64_t predicted = schroder_t(n, x);
            if (y % 2 == 1) predicted = checked_neg(predicted);
            std::ostringstream oss;
            oss << "mu(" << bottom.to_string() << ", " << top.to_string() << ") = " << got
                << ", predicted " << predicted;
            report.cases.push_back(make_case(oss.str(), got == predicted));
        }
    }
    return report;
}

ConjectureReport house_conjecture_scan(int max_n) {
    ConjectureReport report;
    report.name = "house-column Catalan";
    for (int n = 1; n <= max_n && 5 * n <= canonical_order_bound(); ++n) {
        Graph top = make_house();
        for (int i = 1; i < n; ++i) top = disjoint_union(top, make_house());
        std::int64_t graph_mu = mobius(make_empty(n), top);
        PathMultiset ones = PathMultiset::of(std::vector<int>(static_cast<std::size_t>(n), 1));
        PathMultiset fives = PathMultiset::of(std::vector<int>(static_cast<std::size_t>(n), 5));
        std::int64_t path_mu = path_mobius(ones, fives);
        std::int64_t expected = catalan(n);
        std::ostringstream oss;
        oss << "n = " << n << ": mu(" << n << " K1, " << n << " houses) = " << graph_mu << ", mu("
            << ones.to_string() << ", " << fives.to_string() << ") = " << path_mu << ", C_" << n
            << " = " << expected;
        report.cases.push_back(make_case(oss.str(), graph_mu == expected && path_mu == expected));
    }
    return report;
}

ConjectureReport unimodality_scan(int max_order, bool connected_variant) {
    ConjectureReport report;
    report.name = connected_variant ? "rank unimodality (connected poset)" : "rank unimodality";
    for (int n = 1; n <= max_order; ++n) {
        std::uint64_t checked = 0;
        std::string witness;
        for (const Graph& g : all_graphs(n, connected_variant)) {
            DownSet ds = build_down_set(g, connected_variant);
            for (std::size_t h = 0; h < ds.graphs.size(); ++h) {
                ++checked;
                if (is_unimodal(interval_rank_counts(ds, static_cast<int>(h)))) continue;
                if (witness.empty())
                    witness = "[" + to_graph6(ds.graphs[h]) + ", " + to_graph6(g) + "]";
            }
        }
        std::ostringstream oss;
        oss << "|G| = " << n << ": " << checked << " intervals";
        if (witness.empty())
            oss << ", all rank sequences unimodal";
        else
            oss << ", non-unimodal rank sequence at " << witness;
        report.cases.push_back(make_case(oss.str(), witness.empty()));
    }
    return report;
}

ConjectureReport coatom_uniqueness_scan(int max_order) {
    ConjectureReport report;
    report.name = "coatom-set uniqueness";
    for (int n = 3; n <= max_order; ++n) {
        // (bottom, coatom set) -> tops sharing it; a key with two tops is a
        // pair of non-isomorphic graphs the coatoms fail to distinguish.
        std::map<std::pair<CanonicalCode, std::vector<CanonicalCode>>, std::vector<CanonicalCode>> groups;
        for (const Graph& g : all_graphs(n)) {
            DownSet ds = build_down_set(g);
            for (std::size_t h = 0; h < ds.graphs.size(); ++h) {
                int bottom_order = ds.graphs[h].order;
                if (bottom_order < 1 || bottom_order > n - 2) continue;
                std::vector<CanonicalCode> coatom_codes;
                for (std::size_t z = 0; z < ds.graphs.size(); ++z) {
                    if (ds.graphs[z].order != n - 1) continue;
                    if (!ds.leq(static_cast<int>(h), static_cast<int>(z))) continue;
                    coatom_codes.push_back(ds.codes[z]);
                }
                std::sort(coatom_codes.begin(), coatom_codes.end());
                groups[{ds.codes[h], std::move(coatom_codes)}].push_back(ds.codes[ds.top_index]);
            }
        }
        std::uint64_t collisions = 0;
        std::string witness;
        for (const auto& [key, sharing_tops] : groups) {
            if (sharing_tops.size() < 2) continue;
            ++collisions;
            if (!witness.empty()) continue;
            std::ostringstream w;
            w << "bottom " << to_graph6(graph_from_code(key.first)) << " with tops";
            for (const CanonicalCode& code : sharing_tops) w << " " << to_graph6(graph_from_code(code));
            witness = w.str();
        }
        std::ostringstream oss;
        oss << "|G| = " << n << ": " << groups.size() << " (bottom, coatom set) keys, " << collisions
            << " shared by non-isomorphic tops";
        if (!witness.empty()) oss << "; e.g. " << witness;
        report.cases.push_back(make_case(oss.str(), collisions == 0));
    }
    return report;
}

ConjectureReport sign_alternation_scan(int max_order) {
    ConjectureReport report;
    report.name = "sign alternation (known to fail)";
    {
        Graph witness = fixtures::sign_anomaly_graph();
        std::int64_t got = mobius(make_empty(2), witness);
        std::ostringstream oss;
        oss << "mu(2 K1, " << to_graph6(witness) << ") = " << got
            << " on the rank-5 witness; strict alternation would force a negative value";
        report.cases.push_back(make_case(oss.str(), got == 1));
    }
    for (int n = 1; n <= max_order; ++n) {
        std::uint64_t nonzero = 0;
        std::uint64_t violations = 0;
        for (const Graph& g : all_graphs(n)) {
            DownSet ds = build_down_set(g);
            for (std::size_t x = 0; x < ds.graphs.size(); ++x) {
                if (ds.graphs[x].order == 0) continue;
                std::int64_t mu = ds.mobius_to_top[x];
                if (mu == 0) continue;
                ++nonzero;
                int rank = n - ds.graphs[x].order;
                if ((mu < 0) != (rank % 2 == 1)) ++violations;
            }
        }
        std::ostringstream oss;
        oss << "|G| = " << n << ": " << violations << " of " << nonzero
            << " non-zero values break strict sign alternation";
        report.cases.push_back(make_case(oss.str(), true));
    }
    return report;
}

}  // namespace gposet
