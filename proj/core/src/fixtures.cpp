#include "gposet/fixtures.hpp"

namespace gposet::fixtures {

const std::map<std::pair<int, int>, std::int64_t>& equal_paths_table() {
    static const std::map<std::pair<int, int>, std::int64_t> table = [] {
        std::map<std::pair<int, int>, std::int64_t> t;
        auto row = [&t](int n, std::vector<std::int64_t> values) {
            for (std::size_t i = 0; i < values.size(); ++i) t[{n, static_cast<int>(i) + 1}] = values[i];
        };
        row(1, {1, -1, 1, -1, 1, -1, 1, -1, 1});
        row(2, {1, 0, 1, 1, 2, 3, 5, 8});
        row(3, {1, 0, 1, -1, 5, -14, 47});
        row(4, {1, 0, 1, 1, 14, 81});
        row(5, {1, 0, 1, -1, 42});
        row(6, {1, 0, 1, 1});
        row(7, {1, 0, 1});
        row(8, {1, 0});
        row(9, {1});
        return t;
    }();
    return table;
}

const std::map<PathMultiset, std::int64_t>& two_p4_interval_mobius() {
    static const std::map<PathMultiset, std::int64_t> table = [] {
        std::map<PathMultiset, std::int64_t> t;
        auto put = [&t](std::vector<int> parts, std::int64_t mu) {
            t[PathMultiset::of(std::move(parts))] = mu;
        };
        put({1, 1}, 1);
        put({1, 1, 1}, -1);
        put({2, 1}, -1);
        put({3}, -1);
        put({1, 1, 1, 1}, 0);
        put({2, 1, 1}, 1);
        put({2, 2}, 0);
        put({3, 1}, 2);
        put({4}, 1);
        put({2, 1, 1, 1}, 0);
        put({2, 2, 1}, 0);
        put({3, 1, 1}, -1);
        put({3, 2}, -1);
        put({4, 1}, -2);
        put({2, 2, 1, 1}, 0);
        put({3, 2, 1}, 1);
        put({3, 3}, 1);
        put({4, 1, 1}, 1);
        put({4, 2}, 1);
        put({4, 2, 1}, -1);
        put({4, 3}, -2);
        put({4, 4}, 1);
        return t;
    }();
    return table;
}

std::vector<std::pair<Graph, std::int64_t>> house_interval_mobius() {
    std::vector<std::pair<Graph, std::int64_t>> table;
    table.emplace_back(make_complete(1), 1);
    table.emplace_back(make_complete(2), -1);
    table.emplace_back(make_empty(2), -1);
    table.emplace_back(make_complete(3), 0);
    table.emplace_back(make_path(3), 1);
    table.emplace_back(disjoint_union(make_complete(2), make_complete(1)), 1);
    table.emplace_back(make_cycle(4), 0);
    table.emplace_back(make_path(4), -1);
    // Paw: a triangle with one pendant vertex.
    Graph paw = Graph::with_order(4);
    paw.add_edge(0, 1);
    paw.add_edge(0, 2);
    paw.add_edge(1, 2);
    paw.add_edge(2, 3);
    table.emplace_back(paw, -1);
    table.emplace_back(make_house(), 1);
    return table;
}

const std::array<std::array<bool, 9>, 9>& size1_msi_table() {
    constexpr bool T = true;
    constexpr bool F = false;
    static const std::array<std::array<bool, 9>, 9> table{{
        {F, F, F, F, F, F, F, F, F},
        {T, F, F, T, F, F, F, F, F},
        {T, T, F, F, T, T, F, F, F},
        {T, T, T, F, F, F, F, F, F},
        {T, T, T, T, F, F, F, T, F},
        {T, T, T, T, T, F, T, F, F},
        {T, T, T, T, T, T, F, T, F},
        {T, T, T, T, T, T, T, F, F},
        {T, T, T, T, T, T, T, T, F},
    }};
    return table;
}

Graph example_two_c4_sharing_vertex() {
    Graph g = Graph::with_order(7);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(0, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 6);
    g.add_edge(3, 6);
    return g;
}

Graph sign_anomaly_graph() {
    Graph g = Graph::with_order(7);
    g.add_edge(0, 1);
    g.add_edge(1, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 2);
    g.add_edge(2, 0);
    g.add_edge(1, 4);
    g.add_edge(3, 2);
    g.add_edge(3, 5);
    g.add_edge(5, 4);
    g.add_edge(5, 6);
    return g;
}

const std::array<double, 4>& zero_proportion_percent() {
    static const std::array<double, 4> values{16.7, 19.1, 19.0, 14.2};
    return values;
}

}  // namespace gposet::fixtures
