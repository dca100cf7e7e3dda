// Serial reference kernels against their OpenMP counterparts. Each pair runs
// on the same input; set OMP_NUM_THREADS or GENSET_THREADS to vary the
// parallel side.

#include "genset/bounds.hpp"
#include "genset/generator_check.hpp"
#include "genset/kneser.hpp"
#include "genset/serial.hpp"

#include <benchmark/benchmark.h>

#include <cstdlib>
#include <random>

using namespace genset;

namespace {

Graph random_graph(std::size_t m, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = u + 1; v < m; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

void BM_ReachableSerial(benchmark::State& state) {
  const SetFamily f = canonical_generator(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(serial::reachable_depths(f, 3));
}

void BM_ReachableParallel(benchmark::State& state) {
  const SetFamily f = canonical_generator(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(reachable_layers(f, 3));
}

void BM_CliquesSerial(benchmark::State& state) {
  const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(serial::count_cliques(g, 4));
}

void BM_CliquesParallel(benchmark::State& state) {
  const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(count_cliques(g, 4));
}

void BM_ErdosSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::erdos_max(static_cast<int>(state.range(0)), 2, 2));
}

void BM_ErdosParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(erdos_max_check(static_cast<int>(state.range(0)), 2, 2));
}

void BM_UnionProbabilitySerial(benchmark::State& state) {
  const SetFamily f = canonical_generator(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(serial::small_union_probability(f, 3, f.n() / 3));
}

void BM_UnionProbabilityParallel(benchmark::State& state) {
  const SetFamily f = canonical_generator(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(small_union_probability(f, 3, f.n() / 3));
}

void BM_DisjointTuplesSerial(benchmark::State& state) {
  const SetFamily f = canonical_generator(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(serial::count_disjoint_tuples(f, 3));
}

void BM_DisjointTuplesParallel(benchmark::State& state) {
  const SetFamily f = canonical_generator(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(count_disjoint_tuples(f, 3));
}

}  // namespace

BENCHMARK(BM_ReachableSerial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReachableParallel)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CliquesSerial)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CliquesParallel)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ErdosSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ErdosParallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UnionProbabilitySerial)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UnionProbabilityParallel)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DisjointTuplesSerial)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DisjointTuplesParallel)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  if (const char* t = std::getenv("GENSET_THREADS")) set_threads(std::atoi(t));
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
