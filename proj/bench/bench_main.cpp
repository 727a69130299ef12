// Serial reference kernels against their OpenMP counterparts. The parallel
// counters also use one-word rows and 128-bit accumulators when they fit, so
// they lead even on one thread; OMP_NUM_THREADS widens the gap.

#include <benchmark/benchmark.h>

#include <random>

#include "turan/constructions.hpp"
#include "turan/counting.hpp"
#include "turan/random.hpp"
#include "turan/search.hpp"

namespace {

using namespace turan;

Graph dense_host(int n) {
    std::mt19937_64 rng(7);
    return random_graph(n, 1, 2, rng);
}

void BM_cliques_serial(benchmark::State& st) {
    const Graph g = dense_host(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(serial::count_cliques(g, 5));
}

void BM_cliques_parallel(benchmark::State& st) {
    const Graph g = dense_host(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(count_cliques(g, 5));
}

void BM_cliques_turan_serial(benchmark::State& st) {
    const Graph g = turan_graph(6, static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(serial::count_cliques(g, 4));
}

void BM_cliques_turan_parallel(benchmark::State& st) {
    const Graph g = turan_graph(6, static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(count_cliques(g, 4));
}

void BM_embeddings_serial(benchmark::State& st) {
    const PatternSpec h(parse_family("C5"));
    const Graph g = dense_host(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(serial::count_embeddings(h, g));
}

void BM_embeddings_parallel(benchmark::State& st) {
    const PatternSpec h(parse_family("C5"));
    const Graph g = dense_host(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(count_embeddings(h, g));
}

void BM_enumerate_serial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(serial::enumerate_graphs(static_cast<int>(st.range(0))).size());
}

void BM_enumerate_parallel(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_graphs(static_cast<int>(st.range(0))).size());
}

}  // namespace

BENCHMARK(BM_cliques_serial)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cliques_parallel)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cliques_turan_serial)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cliques_turan_parallel)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_embeddings_serial)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_embeddings_parallel)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_serial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_parallel)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
