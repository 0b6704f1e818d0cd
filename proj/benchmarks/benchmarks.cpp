// Microbenchmarks for the hot paths: canonical forms, down-set
// construction, path-table Mobius values, Morse sweeps, and occurrence
// splitting.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "gposet/canonical.hpp"
#include "gposet/enumerate.hpp"
#include "gposet/graph.hpp"
#include "gposet/interval.hpp"
#include "gposet/morse.hpp"
#include "gposet/path_multiset.hpp"
#include "gposet/split.hpp"

namespace {

std::vector<gposet::Graph> random_batch(int order, int count) {
    std::mt19937 rng(12345);
    std::vector<gposet::Graph> batch;
    for (int i = 0; i < count; ++i) {
        gposet::Graph g = gposet::Graph::with_order(order);
        for (int u = 0; u < order; ++u)
            for (int v = u + 1; v < order; ++v)
                if (rng() % 2 == 0) g.add_edge(u, v);
        batch.push_back(g);
    }
    return batch;
}

void canonical_form_order8(benchmark::State& state) {
    auto batch = random_batch(8, 50);
    for (auto _ : state) {
        gposet::clear_canonical_cache();
        for (const auto& g : batch) benchmark::DoNotOptimize(gposet::canonical_form(g));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(batch.size()));
}
BENCHMARK(canonical_form_order8)->Unit(benchmark::kMillisecond);

void down_set_cycle6(benchmark::State& state) {
    gposet::Graph top = gposet::make_cycle(6);
    for (auto _ : state) {
        gposet::clear_canonical_cache();
        benchmark::DoNotOptimize(gposet::build_down_set(top));
    }
}
BENCHMARK(down_set_cycle6)->Unit(benchmark::kMillisecond);

void interval_house(benchmark::State& state) {
    gposet::Graph bottom = gposet::make_complete(1);
    gposet::Graph top = gposet::make_house();
    for (auto _ : state) {
        gposet::clear_canonical_cache();
        benchmark::DoNotOptimize(gposet::build_interval(bottom, top));
    }
}
BENCHMARK(interval_house)->Unit(benchmark::kMillisecond);

void path_mobius_deep_cell(benchmark::State& state) {
    gposet::PathMultiset bottom = gposet::PathMultiset::of({1, 1, 1});
    gposet::PathMultiset top = gposet::PathMultiset::of({7, 7, 7});
    for (auto _ : state) benchmark::DoNotOptimize(gposet::path_mobius(bottom, top));
}
BENCHMARK(path_mobius_deep_cell)->Unit(benchmark::kMillisecond);

void morse_sweep_54(benchmark::State& state) {
    gposet::PathMultiset top = gposet::PathMultiset::of({5, 4});
    for (auto _ : state) benchmark::DoNotOptimize(gposet::morse_sweep(top));
}
BENCHMARK(morse_sweep_54)->Unit(benchmark::kMillisecond);

void split_classify_dv(benchmark::State& state) {
    gposet::Graph bottom = gposet::make_cycle(4);
    gposet::Graph top = gposet::d_v_construction(bottom, 0);
    for (auto _ : state) benchmark::DoNotOptimize(gposet::split_classify(bottom, top));
}
BENCHMARK(split_classify_dv)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
