#include "gposet/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace gposet {

namespace {

void append_bitgroups(std::string& out, const std::vector<int>& bits) {
    for (std::size_t start = 0; start < bits.size(); start += 6) {
        int group = 0;
        for (std::size_t k = 0; k < 6; ++k) {
            group <<= 1;
            if (start + k < bits.size()) group |= bits[start + k];
        }
        out.push_back(static_cast<char>(group + 63));
    }
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string current;
    for (char c : text) {
        if (c == '\n' || c == ';') {
            lines.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    lines.push_back(current);
    return lines;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            values.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument(what + ": cannot parse integer '" + item + "'");
        }
    }
    if (values.empty()) throw std::invalid_argument(what + ": empty parameter list");
    return values;
}

bool looks_like_graph6(const std::string& text) {
    if (text.empty()) return false;
    return std::all_of(text.begin(), text.end(),
                       [](char c) { return c >= 63 && c <= 126; });
}

}  // namespace

std::string to_graph6(const Graph& g) {
    if (!g.is_simple()) throw std::invalid_argument("to_graph6: graph6 cannot represent loops or multi-edges");
    if (g.order > 258047) throw std::invalid_argument("to_graph6: order too large");
    std::string out;
    if (g.order <= 62) {
        out.push_back(static_cast<char>(g.order + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((g.order >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((g.order >> 6) & 63) + 63));
        out.push_back(static_cast<char>((g.order & 63) + 63));
    }
    std::vector<int> bits;
    bits.reserve(static_cast<std::size_t>(g.order) * (g.order - 1) / 2);
    for (int j = 1; j < g.order; ++j) {
        for (int i = 0; i < j; ++i) bits.push_back(g.adj[i][j]);
    }
    append_bitgroups(out, bits);
    return out;
}

Graph from_graph6(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("from_graph6: empty input");
    std::size_t pos = 0;
    long long n = 0;
    if (text[0] == '~') {
        if (text.size() < 4) throw std::invalid_argument("from_graph6: truncated order field");
        for (int k = 1; k <= 3; ++k) {
            int v = static_cast<unsigned char>(text[k]) - 63;
            if (v < 0 || v > 63) throw std::invalid_argument("from_graph6: invalid order byte");
            n = (n << 6) | v;
        }
        pos = 4;
    } else {
        n = static_cast<unsigned char>(text[0]) - 63;
        if (n < 0 || n > 62) throw std::invalid_argument("from_graph6: invalid order byte");
        pos = 1;
    }
    Graph g = Graph::with_order(static_cast<int>(n));
    long long bit_count = n * (n - 1) / 2;
    long long byte_count = (bit_count + 5) / 6;
    if (static_cast<long long>(text.size()) - static_cast<long long>(pos) != byte_count) {
        throw std::invalid_argument("from_graph6: length does not match order");
    }
    long long bit_index = 0;
    for (int j = 1; j < g.order; ++j) {
        for (int i = 0; i < j; ++i) {
            long long byte = pos + bit_index / 6;
            int shift = 5 - static_cast<int>(bit_index % 6);
            int v = static_cast<unsigned char>(text[static_cast<std::size_t>(byte)]) - 63;
            if (v < 0 || v > 63) throw std::invalid_argument("from_graph6: invalid data byte");
            if ((v >> shift) & 1) {
                g.adj[i][j] = 1;
                g.adj[j][i] = 1;
            }
            ++bit_index;
        }
    }
    return g;
}

std::string to_multigraph_text(const Graph& g) {
    std::ostringstream out;
    out << "n=" << g.order;
    for (int i = 0; i < g.order; ++i) {
        for (int j = i; j < g.order; ++j) {
            if (g.adj[i][j] > 0) out << '\n' << i << ' ' << j << ' ' << g.adj[i][j];
        }
    }
    return out.str();
}

Graph from_multigraph_text(const std::string& text) {
    std::vector<std::string> lines = split_lines(text);
    std::size_t first = 0;
    while (first < lines.size() && lines[first].empty()) ++first;
    if (first == lines.size() || lines[first].rfind("n=", 0) != 0) {
        throw std::invalid_argument("from_multigraph_text: expected leading n=<order>");
    }
    int n = 0;
    try {
        n = std::stoi(lines[first].substr(2));
    } catch (const std::exception&) {
        throw std::invalid_argument("from_multigraph_text: cannot parse order");
    }
    Graph g = Graph::with_order(n);
    for (std::size_t k = first + 1; k < lines.size(); ++k) {
        if (lines[k].empty()) continue;
        std::istringstream line(lines[k]);
        int i = 0, j = 0, m = 0;
        if (!(line >> i >> j >> m)) {
            throw std::invalid_argument("from_multigraph_text: bad edge line '" + lines[k] + "'");
        }
        if (i < 0 || i >= n || j < 0 || j >= n) {
            throw std::out_of_range("from_multigraph_text: vertex index out of range");
        }
        if (m < 1) throw std::invalid_argument("from_multigraph_text: multiplicity must be positive");
        g.add_edge(i, j, m);
    }
    return g;
}

std::string to_dot(const Graph& g, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < g.order; ++v) out << "  " << v << ";\n";
    for (int i = 0; i < g.order; ++i) {
        for (int j = i; j < g.order; ++j) {
            for (int m = 0; m < g.adj[i][j]; ++m) out << "  " << i << " -- " << j << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

Graph parse_graph_spec(const std::string& spec) {
    if (spec.empty()) throw std::invalid_argument("parse_graph_spec: empty spec");
    if (spec == "null") return make_null();
    if (spec == "house") return make_house();
    if (spec.rfind("n=", 0) == 0) return from_multigraph_text(spec);
    if (spec.rfind("g6:", 0) == 0) return from_graph6(spec.substr(3));
    if (spec.rfind("Dv:", 0) == 0) {
        return d_v_construction(parse_graph_spec(spec.substr(3)), 0);
    }
    auto try_prefixed = [&](const char* prefix) -> std::string {
        std::string p(prefix);
        if (spec.rfind(p, 0) == 0) return spec.substr(p.size());
        return {};
    };
    if (std::string arg = try_prefixed("path:"); !arg.empty()) return make_path(parse_int_list(arg, "path")[0]);
    if (std::string arg = try_prefixed("cycle:"); !arg.empty()) return make_cycle(parse_int_list(arg, "cycle")[0]);
    if (std::string arg = try_prefixed("complete:"); !arg.empty()) return make_complete(parse_int_list(arg, "complete")[0]);
    if (std::string arg = try_prefixed("empty:"); !arg.empty()) return make_empty(parse_int_list(arg, "empty")[0]);
    if (std::string arg = try_prefixed("nK1:"); !arg.empty()) return make_empty(parse_int_list(arg, "nK1")[0]);
    if (std::string arg = try_prefixed("paths:"); !arg.empty()) {
        Graph g = make_null();
        for (int part : parse_int_list(arg, "paths")) g = disjoint_union(g, make_path(part));
        return g;
    }
    if (std::string arg = try_prefixed("multipartite:"); !arg.empty()) {
        return make_complete_multipartite(parse_int_list(arg, "multipartite"));
    }
    if (std::string arg = try_prefixed("houses:"); !arg.empty()) {
        int n = parse_int_list(arg, "houses")[0];
        if (n < 1) throw std::invalid_argument("houses: need n >= 1");
        Graph g = make_null();
        for (int k = 0; k < n; ++k) g = disjoint_union(g, make_house());
        return g;
    }
    if (spec.size() >= 2 && spec[0] == 'K' &&
        std::all_of(spec.begin() + 1, spec.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        return make_complete(std::stoi(spec.substr(1)));
    }
    if (looks_like_graph6(spec)) return from_graph6(spec);
    throw std::invalid_argument("parse_graph_spec: unrecognized spec '" + spec + "'");
}

}  // namespace gposet
