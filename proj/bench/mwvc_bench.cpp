// Serial reference kernels against their fast or OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "mwvc/oracle.hpp"
#include "mwvc/reduce.hpp"
#include "mwvc/search.hpp"

namespace {

using namespace mwvc;

void BM_OracleSerial(benchmark::State& state) {
  const auto g = random_graph(state.range(0), EdgeProbability{0.2}, WeightScheme::index_mod_200(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_mwvc(g).weight);
}
BENCHMARK(BM_OracleSerial)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_OracleParallel(benchmark::State& state) {
  const auto g = random_graph(state.range(0), EdgeProbability{0.2}, WeightScheme::index_mod_200(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_mwvc_parallel(g).weight);
}
BENCHMARK(BM_OracleParallel)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

template <class Reducer>
void run_reduce(benchmark::State& state, Reducer reducer) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto original = random_graph(n, TargetEdges{n * 3 / 2}, WeightScheme::index_mod_200(), 2);
  for (auto _ : state) {
    state.PauseTiming();
    auto g = original;
    state.ResumeTiming();
    benchmark::DoNotOptimize(reducer(g).passes);
  }
}

void BM_ReduceFullSweeps(benchmark::State& state) {
  run_reduce(state, [](WeightedGraph& g) { return reduce_reference(g); });
}
BENCHMARK(BM_ReduceFullSweeps)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_ReduceIncremental(benchmark::State& state) {
  run_reduce(state, [](WeightedGraph& g) { return reduce(g); });
}
BENCHMARK(BM_ReduceIncremental)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_Solve(benchmark::State& state) {
  // Many mid-sized components so the parallel loop has work to share.
  const auto g = random_graph(2000, TargetEdges{2400}, WeightScheme::index_mod_200(), 3);
  SolveOptions options;
  options.parallel_components = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(solve(g, options).weight);
}
BENCHMARK(BM_Solve)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
