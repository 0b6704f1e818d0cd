// gposet command-line tool: Mobius queries, interval exports, the
// equal-parts path table, whole-poset censuses, conjecture scans, the
// discrete Morse chain engine, and zero-split classification.
//
// Subcommands: mu, interval, table2, zero-proportion, conjectures, morse,
// split-classify. Global flags: --max-order, --connected, --jobs,
// --format {text,json}, --out FILE, --strict. Exit codes: 0 on
// completion, 1 on usage or input errors, 2 under --strict when any
// cross-check between independent computations disagrees. Output ordering
// is deterministic: elements are listed by canonical code, chains in
// enumeration order.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gposet/canonical.hpp"
#include "gposet/census.hpp"
#include "gposet/enumerate.hpp"
#include "gposet/fixtures.hpp"
#include "gposet/formulas.hpp"
#include "gposet/graph.hpp"
#include "gposet/interval.hpp"
#include "gposet/io.hpp"
#include "gposet/morse.hpp"
#include "gposet/path_multiset.hpp"
#include "gposet/split.hpp"

namespace {

using nlohmann::ordered_json;

struct GlobalOptions {
    int max_order = 6;
    bool connected = false;
    int jobs = 1;
    std::string format = "text";
    std::string out_path;
    bool strict = false;
};

// Set when any cross-check between independent computations disagrees;
// --strict turns this into exit code 2.
struct RunOutcome {
    bool mismatch = false;
};

void emit(const GlobalOptions& opt, const std::string& text, const ordered_json& report) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!opt.out_path.empty()) {
        file.open(opt.out_path);
        if (!file) throw std::runtime_error("cannot open output file " + opt.out_path);
        out = &file;
    }
    if (opt.format == "json")
        *out << report.dump(2) << "\n";
    else
        *out << text;
}

void emit_raw(const GlobalOptions& opt, const std::string& text) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!opt.out_path.empty()) {
        file.open(opt.out_path);
        if (!file) throw std::runtime_error("cannot open output file " + opt.out_path);
        out = &file;
    }
    *out << text;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// One-line identity for a graph: graph6 when simple, otherwise the
// multigraph mini-language with semicolons for line breaks.
std::string graph_repr(const gposet::Graph& g) {
    if (g.is_simple()) return gposet::to_graph6(g);
    std::string text = gposet::to_multigraph_text(g);
    std::replace(text.begin(), text.end(), '\n', ';');
    return text;
}

std::string dot_escape(const std::string& raw) {
    std::string escaped;
    for (char c : raw) {
        if (c == '"' || c == '\\') escaped.push_back('\\');
        escaped.push_back(c);
    }
    return escaped;
}

gposet::PathMultiset multiset_spec(const std::string& spec) {
    gposet::Graph g = gposet::parse_graph_spec(spec);
    std::optional<gposet::PathMultiset> m = gposet::multiset_from_graph(g);
    if (!m) throw std::invalid_argument("'" + spec + "' is not a disjoint union of paths");
    return *m;
}

std::string chain_to_string(const gposet::OperationChain& chain) {
    std::string joined;
    for (std::size_t i = 0; i < chain.ops.size(); ++i) {
        if (i > 0) joined += ",";
        joined += gposet::operation_to_string(chain.ops[i]);
    }
    return joined;
}

std::string interval_to_dot(const gposet::Interval& iv) {
    std::ostringstream dot;
    dot << "digraph interval {\n  rankdir=BT;\n  node [shape=box];\n";
    std::map<gposet::CanonicalCode, std::string> ids;
    int next_id = 0;
    for (const auto& [code, element] : iv.elements) ids[code] = "n" + std::to_string(next_id++);
    for (const auto& [code, element] : iv.elements) {
        dot << "  " << ids[code] << " [label=\"" << dot_escape(graph_repr(element.representative))
            << "\\nrank " << element.rank << "\\nmu " << element.mobius_from_bottom << "\"];\n";
    }
    for (const auto& [lower, upper] : iv.hasse_edges) {
        dot << "  " << ids.at(lower) << " -> " << ids.at(upper) << ";\n";
    }
    dot << "}\n";
    return dot.str();
}

void run_mu(const GlobalOptions& opt, const std::string& bottom_spec, const std::string& top_spec,
            RunOutcome& outcome) {
    gposet::Graph h = gposet::parse_graph_spec(bottom_spec);
    gposet::Graph g = gposet::parse_graph_spec(top_spec);
    bool contains = h.order <= g.order && gposet::contains_induced(h, g);
    std::int64_t value = opt.connected ? gposet::mobius_connected(h, g) : gposet::mobius(h, g);
    std::optional<gposet::ClosedFormMatch> prediction;
    if (!opt.connected) prediction = gposet::closed_form_prediction(h, g);

    std::ostringstream text;
    text << (opt.connected ? "mu_c" : "mu") << "(" << graph_repr(h) << ", " << graph_repr(g)
         << ") = " << value << "\n";
    if (!contains) text << "note: the bottom does not embed in the top, so mu = 0 by convention\n";
    ordered_json report{{"command", "mu"},
                        {"bottom", graph_repr(h)},
                        {"top", graph_repr(g)},
                        {"connected", opt.connected},
                        {"contains", contains},
                        {"mu", value},
                        {"closed_form", nullptr}};
    if (prediction) {
        bool matches = prediction->value == value;
        text << "closed form (" << prediction->description << "): " << prediction->value
             << (matches ? " [match]" : " [MISMATCH]") << "\n";
        report["closed_form"] =
            ordered_json{{"rule", prediction->description}, {"value", prediction->value}, {"matches", matches}};
        if (!matches) outcome.mismatch = true;
    }
    emit(opt, text.str(), report);
}

void run_interval(const GlobalOptions& opt, const std::string& bottom_spec, const std::string& top_spec,
                  bool as_dot) {
    gposet::Graph h = gposet::parse_graph_spec(bottom_spec);
    gposet::Graph g = gposet::parse_graph_spec(top_spec);
    bool contains = h.order <= g.order && gposet::contains_induced(h, g);
    if (!contains) {
        ordered_json report{{"command", "interval"},
                            {"bottom", graph_repr(h)},
                            {"top", graph_repr(g)},
                            {"contains", false},
                            {"elements", ordered_json::array()}};
        emit(opt, "empty interval: the bottom does not embed in the top\n", report);
        return;
    }
    gposet::Interval iv = gposet::build_interval(h, g, opt.connected);
    if (as_dot) {
        emit_raw(opt, interval_to_dot(iv));
        return;
    }
    std::vector<int> ranks = gposet::rank_sequence(iv);
    bool disconnected = gposet::interior_disconnected(iv);
    bool unimodal = gposet::is_unimodal(ranks);

    std::ostringstream text;
    text << "interval [" << graph_repr(h) << ", " << graph_repr(g) << "]: " << iv.elements.size()
         << " elements, rank " << ranks.size() - 1 << (opt.connected ? ", connected poset" : "") << "\n";
    text << "rank sequence:";
    for (int count : ranks) text << " " << count;
    text << "\n";
    text << "interior disconnected: " << (disconnected ? "yes" : "no") << "\n";
    text << "unimodal: " << (unimodal ? "yes" : "no") << "\n";
    text << "rank  mu  element\n";
    ordered_json elements = ordered_json::array();
    for (const auto& [code, element] : iv.elements) {
        text << std::setw(4) << element.rank << " " << std::setw(3) << element.mobius_from_bottom << "  "
             << graph_repr(element.representative) << "\n";
        elements.push_back(ordered_json{{"element", graph_repr(element.representative)},
                                        {"order", element.representative.order},
                                        {"rank", element.rank},
                                        {"mu", element.mobius_from_bottom}});
    }
    ordered_json hasse = ordered_json::array();
    for (const auto& [lower, upper] : iv.hasse_edges) {
        hasse.push_back(ordered_json::array({graph_repr(gposet::graph_from_code(lower)),
                                             graph_repr(gposet::graph_from_code(upper))}));
    }
    ordered_json report{{"command", "interval"},
                        {"bottom", graph_repr(h)},
                        {"top", graph_repr(g)},
                        {"connected", opt.connected},
                        {"contains", true},
                        {"element_count", iv.elements.size()},
                        {"rank_sequence", ranks},
                        {"interior_disconnected", disconnected},
                        {"unimodal", unimodal},
                        {"elements", elements},
                        {"hasse", hasse}};
    emit(opt, text.str(), report);
}

void run_table2(const GlobalOptions& opt, int max_total, RunOutcome& outcome) {
    auto start = std::chrono::steady_clock::now();
    std::map<std::pair<int, int>, std::int64_t> fixture = gposet::fixtures::equal_paths_table();

    struct Row {
        int n = 0;
        int x = 0;
        std::int64_t value = 0;
        std::optional<std::int64_t> fixture_value;
        std::optional<std::int64_t> closed_form;
    };
    std::vector<Row> rows;
    std::uint64_t fixture_cells = 0;
    std::uint64_t fixture_matches = 0;
    std::uint64_t closed_cells = 0;
    std::uint64_t closed_matches = 0;
    for (int n = 1; n + 1 <= max_total; ++n) {
        for (int x = 1; n + x <= max_total; ++x) {
            Row row;
            row.n = n;
            row.x = x;
            gposet::PathMultiset bottom = gposet::PathMultiset::of(std::vector<int>(static_cast<std::size_t>(n), 1));
            gposet::PathMultiset top = gposet::PathMultiset::of(std::vector<int>(static_cast<std::size_t>(n), x));
            row.value = gposet::path_mobius(bottom, top);
            row.closed_form = gposet::mu_n_paths_column(x, n);
            auto it = fixture.find({n, x});
            if (it != fixture.end()) row.fixture_value = it->second;
            if (row.fixture_value) {
                ++fixture_cells;
                if (*row.fixture_value == row.value) ++fixture_matches;
            }
            if (row.closed_form) {
                ++closed_cells;
                if (*row.closed_form == row.value) ++closed_matches;
            }
            rows.push_back(row);
        }
    }
    bool agreement = fixture_matches == fixture_cells && closed_matches == closed_cells;
    if (!agreement) outcome.mismatch = true;

    std::ostringstream text;
    text << "mu(1^n, x^n) for n + x <= " << max_total << " (* marks a fixture or closed-form mismatch)\n";
    text << " n\\x";
    for (int x = 1; x + 1 <= max_total; ++x) text << std::setw(6) << x;
    text << "\n";
    std::size_t at = 0;
    for (int n = 1; n + 1 <= max_total; ++n) {
        text << std::setw(4) << n;
        for (int x = 1; n + x <= max_total; ++x) {
            const Row& row = rows[at++];
            bool clean = (!row.fixture_value || *row.fixture_value == row.value) &&
                         (!row.closed_form || *row.closed_form == row.value);
            std::string cell = std::to_string(row.value) + (clean ? "" : "*");
            text << std::setw(6) << cell;
        }
        text << "\n";
    }
    text << "fixture cells: " << fixture_matches << "/" << fixture_cells << " match\n";
    text << "closed-form cells: " << closed_matches << "/" << closed_cells << " match\n";

    ordered_json json_rows = ordered_json::array();
    for (const Row& row : rows) {
        ordered_json record{{"n", row.n}, {"x", row.x}, {"mu", row.value}};
        record["fixture"] = row.fixture_value ? ordered_json(*row.fixture_value) : ordered_json(nullptr);
        record["fixture_match"] =
            row.fixture_value ? ordered_json(*row.fixture_value == row.value) : ordered_json(nullptr);
        record["closed_form"] = row.closed_form ? ordered_json(*row.closed_form) : ordered_json(nullptr);
        record["closed_form_match"] =
            row.closed_form ? ordered_json(*row.closed_form == row.value) : ordered_json(nullptr);
        json_rows.push_back(std::move(record));
    }
    ordered_json report{{"command", "table2"},
                        {"max_total", max_total},
                        {"rows", json_rows},
                        {"agreement", agreement},
                        {"runtime_seconds", seconds_since(start)}};
    emit(opt, text.str(), report);
}

void run_zero_proportion(const GlobalOptions& opt, int n_arg, const std::string& convention_name,
                         RunOutcome& outcome) {
    auto start = std::chrono::steady_clock::now();
    gposet::CensusConvention convention = gposet::default_census_convention;
    for (gposet::CensusConvention candidate :
         {gposet::CensusConvention::include_equal, gposet::CensusConvention::exclude_equal,
          gposet::CensusConvention::exclude_trivial_ranks}) {
        if (gposet::to_string(candidate) == convention_name) convention = candidate;
    }
    int max_n = n_arg > 0 ? n_arg : opt.max_order;
    int first_n = max_n >= 4 ? 4 : max_n;
    std::array<double, 4> reference = gposet::fixtures::zero_proportion_percent();

    std::ostringstream text;
    text << "zero-Mobius proportion, convention " << gposet::to_string(convention) << "\n";
    ordered_json json_rows = ordered_json::array();
    bool agreement = true;
    for (int n = first_n; n <= max_n; ++n) {
        gposet::ZeroProportionResult result = gposet::zero_proportion(n, convention, opt.jobs);
        std::optional<double> expected;
        if (n >= 4 && n <= 7) expected = reference[static_cast<std::size_t>(n - 4)];
        bool within = !expected || std::abs(result.percent() - *expected) <= 0.5;
        if (!within) agreement = false;
        text << "|G| <= " << n << ": " << result.zeros << " of " << result.intervals
             << " intervals have mu = 0 (" << std::fixed << std::setprecision(1) << result.percent()
             << "%)";
        if (expected)
            text << ", reference " << std::setprecision(1) << *expected << "% ["
                 << (within ? "within" : "OUTSIDE") << " 0.5]";
        text << "\n";
        ordered_json record{{"max_order", n},
                            {"intervals", result.intervals},
                            {"zeros", result.zeros},
                            {"percent", result.percent()}};
        record["reference_percent"] = expected ? ordered_json(*expected) : ordered_json(nullptr);
        record["within_tolerance"] = expected ? ordered_json(within) : ordered_json(nullptr);
        json_rows.push_back(std::move(record));
    }
    if (!agreement) outcome.mismatch = true;
    ordered_json report{{"command", "zero-proportion"},
                        {"convention", gposet::to_string(convention)},
                        {"rows", json_rows},
                        {"agreement", agreement},
                        {"runtime_seconds", seconds_since(start)}};
    emit(opt, text.str(), report);
}

void run_conjectures(const GlobalOptions& opt, std::vector<std::string> which, int schroder_n, int house_n,
                     RunOutcome& outcome) {
    auto start = std::chrono::steady_clock::now();
    if (which.empty()) which = {"schroder", "house", "unimodal", "coatoms", "alternating"};
    std::vector<gposet::ConjectureReport> reports;
    for (const std::string& name : which) {
        if (name == "schroder") {
            reports.push_back(gposet::schroder_conjecture_scan(schroder_n));
            if (!reports.back().all_agree()) outcome.mismatch = true;
        } else if (name == "house") {
            reports.push_back(gposet::house_conjecture_scan(house_n));
            if (!reports.back().all_agree()) outcome.mismatch = true;
        } else if (name == "unimodal") {
            reports.push_back(gposet::unimodality_scan(opt.max_order, false));
            reports.push_back(gposet::unimodality_scan(opt.max_order, true));
        } else if (name == "coatoms") {
            reports.push_back(gposet::coatom_uniqueness_scan(opt.max_order));
        } else if (name == "alternating") {
            reports.push_back(gposet::sign_alternation_scan(opt.max_order));
            if (!reports.back().cases.empty() && !reports.back().cases.front().agrees)
                outcome.mismatch = true;
        } else {
            throw std::invalid_argument("unknown conjecture scan '" + name +
                                        "'; choose from schroder, house, unimodal, coatoms, alternating");
        }
    }

    std::ostringstream text;
    ordered_json json_reports = ordered_json::array();
    for (const gposet::ConjectureReport& report : reports) {
        text << "== " << report.name << " ==\n";
        ordered_json cases = ordered_json::array();
        for (const gposet::ConjectureCase& c : report.cases) {
            text << "  [" << (c.agrees ? "ok" : "!!") << "] " << c.description << "\n";
            cases.push_back(ordered_json{{"description", c.description}, {"agrees", c.agrees}});
        }
        text << "  agreement: " << report.agree_count() << "/" << report.cases.size() << "\n";
        json_reports.push_back(
            ordered_json{{"name", report.name}, {"cases", cases}, {"all_agree", report.all_agree()}});
    }
    ordered_json report{{"command", "conjectures"},
                        {"reports", json_reports},
                        {"runtime_seconds", seconds_since(start)}};
    emit(opt, text.str(), report);
}

void run_morse(const GlobalOptions& opt, const std::string& top_spec, const std::string& bottom_spec,
               std::size_t chain_cap, std::uint64_t node_cap, RunOutcome& outcome) {
    gposet::PathMultiset top = multiset_spec(top_spec);
    gposet::PathMultiset bottom = multiset_spec(bottom_spec);
    if (!gposet::packing_contains(bottom, top)) {
        ordered_json report{{"command", "morse"},
                            {"top", top.to_string()},
                            {"bottom", bottom.to_string()},
                            {"contains", false},
                            {"morse_mu", 0},
                            {"recursion_mu", 0},
                            {"agreement", true}};
        emit(opt, "the bottom does not pack into the top, so mu = 0 by convention\n", report);
        return;
    }
    std::vector<gposet::OperationChain> chains = gposet::enumerate_maximal_chains(top, bottom, chain_cap);
    std::vector<std::string> critical;
    for (const gposet::OperationChain& chain : chains) {
        gposet::MorseRecord rec = gposet::skipped_intervals(chain);
        gposet::compute_j_intervals(rec);
        if (rec.is_critical) critical.push_back(chain_to_string(chain));
    }
    std::int64_t morse_mu = gposet::mobius_via_morse(top, bottom, node_cap);
    std::int64_t recursion_mu = gposet::path_mobius(bottom, top);
    bool agreement = morse_mu == recursion_mu;
    if (!agreement) outcome.mismatch = true;

    std::ostringstream text;
    text << "interval [" << bottom.to_string() << ", " << top.to_string() << "] in the path poset\n";
    text << "maximal chains: " << chains.size() << "\n";
    text << "critical chains (" << critical.size() << "):\n";
    for (const std::string& chain : critical) text << "  " << (chain.empty() ? "(empty)" : chain) << "\n";
    text << "morse mu = " << morse_mu << ", recursion mu = " << recursion_mu << " ["
         << (agreement ? "agree" : "DISAGREE") << "]\n";
    ordered_json report{{"command", "morse"},
                        {"top", top.to_string()},
                        {"bottom", bottom.to_string()},
                        {"contains", true},
                        {"chain_count", chains.size()},
                        {"critical_chains", critical},
                        {"morse_mu", morse_mu},
                        {"recursion_mu", recursion_mu},
                        {"agreement", agreement}};
    emit(opt, text.str(), report);
}

void run_split_classify(const GlobalOptions& opt, const std::string& bottom_spec,
                        const std::string& top_spec, RunOutcome& outcome) {
    gposet::Graph h = gposet::parse_graph_spec(bottom_spec);
    gposet::Graph g = gposet::parse_graph_spec(top_spec);
    gposet::SplitReport result = gposet::split_classify(h, g);
    gposet::OccurrenceSet occ = gposet::occurrences(h, g);

    std::string status;
    switch (result.status) {
        case gposet::SplitStatus::not_zero_split: status = "not-zero-split"; break;
        case gposet::SplitStatus::zero_split_only: status = "zero-split-only"; break;
        case gposet::SplitStatus::strongly_zero_split: status = "strongly-zero-split"; break;
    }

    std::ostringstream text;
    text << "occurrences of the bottom in the top: " << occ.occurrences.size() << "\n";
    text << "status: " << status << "\n";
    ordered_json report{{"command", "split-classify"},
                        {"bottom", graph_repr(h)},
                        {"top", graph_repr(g)},
                        {"occurrences", occ.occurrences.size()},
                        {"status", status}};
    if (result.partition) {
        text << "zero-split partition: " << result.partition->first.size() << " + "
             << result.partition->second.size() << " occurrences\n";
        report["partition"] = ordered_json{{"a", result.partition->first}, {"b", result.partition->second}};
    } else {
        report["partition"] = nullptr;
    }
    if (result.witness) {
        text << "strongness witness: occurrences " << ordered_json(result.witness->eta).dump() << " and "
             << ordered_json(result.witness->phi).dump() << " extend isomorphically via vertices "
             << result.witness->i << " and " << result.witness->j << "\n";
        report["witness"] = ordered_json{{"eta", result.witness->eta},
                                         {"phi", result.witness->phi},
                                         {"i", result.witness->i},
                                         {"j", result.witness->j}};
    } else {
        report["witness"] = nullptr;
    }
    if (g.order - h.order > 2) {
        gposet::Interval iv = gposet::build_interval(h, g, false);
        bool disconnected = gposet::interior_disconnected(iv);
        bool strong = result.status == gposet::SplitStatus::strongly_zero_split;
        bool agrees = disconnected == strong;
        if (!agrees) outcome.mismatch = true;
        text << "interior disconnected: " << (disconnected ? "yes" : "no")
             << "; equivalence with strong zero-split " << (agrees ? "holds" : "FAILS") << "\n";
        report["interior_disconnected"] = disconnected;
        report["theorem_agrees"] = agrees;
    } else {
        text << "rank " << g.order - h.order
             << " interval: the disconnection equivalence applies only above rank 2\n";
        report["interior_disconnected"] = nullptr;
        report["theorem_agrees"] = nullptr;
    }
    emit(opt, text.str(), report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"intervals, Mobius functions, zero-splits and discrete Morse chains in the "
                 "induced-subgraph order on unlabelled graphs"};
    app.require_subcommand(1);
    GlobalOptions opt;
    app.add_option("--max-order", opt.max_order,
                   "Top order bound for sweeps; values above the canonical order bound raise it")
        ->capture_default_str();
    app.add_flag("--connected", opt.connected, "Use the connected-graphs poset where applicable");
    app.add_option("--jobs", opt.jobs, "Worker threads for censuses")->capture_default_str();
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--out", opt.out_path, "Write output to FILE instead of stdout");
    app.add_flag("--strict", opt.strict, "Exit 2 when any cross-check disagrees");

    std::string mu_bottom, mu_top;
    CLI::App* mu_cmd = app.add_subcommand("mu", "Mobius value mu(bottom, top) with closed-form cross-check");
    mu_cmd->fallthrough();
    mu_cmd->add_option("bottom", mu_bottom, "Bottom graph spec")->required();
    mu_cmd->add_option("top", mu_top, "Top graph spec")->required();

    std::string interval_bottom, interval_top;
    bool interval_dot = false;
    bool interval_json = false;
    CLI::App* interval_cmd =
        app.add_subcommand("interval", "Materialize the interval [bottom, top] with ranks and Mobius values");
    interval_cmd->fallthrough();
    interval_cmd->add_option("bottom", interval_bottom, "Bottom graph spec")->required();
    interval_cmd->add_option("top", interval_top, "Top graph spec")->required();
    interval_cmd->add_flag("--dot", interval_dot, "Emit a DOT digraph of the Hasse diagram");
    interval_cmd->add_flag("--json", interval_json, "Shorthand for --format json");

    int table2_max_total = 10;
    CLI::App* table2_cmd = app.add_subcommand(
        "table2", "The equal-parts path table mu(1^n, x^n) with fixture and closed-form diffs");
    table2_cmd->fallthrough();
    table2_cmd->add_option("--max-total", table2_max_total, "Compute cells with n + x up to this bound")
        ->check(CLI::Range(2, 1000))
        ->capture_default_str();

    int zero_n = 0;
    std::string zero_convention = gposet::to_string(gposet::default_census_convention);
    CLI::App* zero_cmd = app.add_subcommand(
        "zero-proportion", "Proportion of intervals [H, G], |G| <= n, with vanishing Mobius function");
    zero_cmd->fallthrough();
    zero_cmd->add_option("n", zero_n, "Top order bound (defaults to --max-order; 7 is long-running)")
        ->check(CLI::Range(1, 8));
    zero_cmd->add_option("--convention", zero_convention, "Which (H, G) pairs count as intervals")
        ->check(CLI::IsMember({"include-equal", "exclude-equal", "exclude-trivial-ranks"}))
        ->capture_default_str();

    std::vector<std::string> conjecture_names;
    int schroder_n = 4;
    int house_n = 2;
    CLI::App* conjectures_cmd =
        app.add_subcommand("conjectures", "Empirical scans: schroder, house, unimodal, coatoms, alternating");
    conjectures_cmd->fallthrough();
    conjectures_cmd->add_option("which", conjecture_names, "Scans to run (default: all)")
        ->check(CLI::IsMember({"schroder", "house", "unimodal", "coatoms", "alternating"}));
    conjectures_cmd->add_option("--schroder-n", schroder_n, "Largest n for the Schroder scan")
        ->check(CLI::Range(1, 8))
        ->capture_default_str();
    conjectures_cmd->add_option("--house-n", house_n, "Largest n for the house scan")
        ->check(CLI::Range(1, 4))
        ->capture_default_str();

    std::string morse_top, morse_bottom;
    std::size_t morse_chain_cap = gposet::default_chain_cap;
    std::uint64_t morse_node_cap = gposet::default_node_cap;
    CLI::App* morse_cmd = app.add_subcommand(
        "morse", "Discrete Morse chain report for a path-poset interval (parts at most 5)");
    morse_cmd->fallthrough();
    morse_cmd->add_option("top", morse_top, "Top path union, e.g. paths:5,5")->required();
    morse_cmd->add_option("bottom", morse_bottom, "Bottom path union, e.g. paths:1,1")->required();
    morse_cmd->add_option("--chain-cap", morse_chain_cap, "Abort beyond this many maximal chains")
        ->capture_default_str();
    morse_cmd->add_option("--node-cap", morse_node_cap, "Abort beyond this many search nodes")
        ->capture_default_str();

    std::string split_bottom, split_top;
    CLI::App* split_cmd = app.add_subcommand(
        "split-classify", "Zero-split classification of the occurrence set of bottom in top");
    split_cmd->fallthrough();
    split_cmd->add_option("bottom", split_bottom, "Bottom graph spec")->required();
    split_cmd->add_option("top", split_top, "Top graph spec")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    RunOutcome outcome;
    try {
        if (opt.max_order > gposet::canonical_order_bound())
            gposet::set_canonical_order_bound(opt.max_order);
        if (interval_json) opt.format = "json";
        if (mu_cmd->parsed()) {
            run_mu(opt, mu_bottom, mu_top, outcome);
        } else if (interval_cmd->parsed()) {
            run_interval(opt, interval_bottom, interval_top, interval_dot);
        } else if (table2_cmd->parsed()) {
            run_table2(opt, table2_max_total, outcome);
        } else if (zero_cmd->parsed()) {
            run_zero_proportion(opt, zero_n, zero_convention, outcome);
        } else if (conjectures_cmd->parsed()) {
            run_conjectures(opt, conjecture_names, schroder_n, house_n, outcome);
        } else if (morse_cmd->parsed()) {
            run_morse(opt, morse_top, morse_bottom, morse_chain_cap, morse_node_cap, outcome);
        } else if (split_cmd->parsed()) {
            run_split_classify(opt, split_bottom, split_top, outcome);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return opt.strict && outcome.mismatch ? 2 : 0;
}
