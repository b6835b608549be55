#include <benchmark/benchmark.h>

#include "bandred/constructions.hpp"
#include "bandred/generators.hpp"
#include "bandred/solvers.hpp"

using namespace bandred;

static void BM_DecisionGrid(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = grid(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(bandwidth_decision(g, n - 1));
}
BENCHMARK(BM_DecisionGrid)->Arg(3)->Arg(4)->Arg(5);

static void BM_ExactBandwidthWheel(benchmark::State& state) {
  const Graph g = wheel(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_bandwidth(g).value);
}
BENCHMARK(BM_ExactBandwidthWheel)->DenseRange(6, 11, 5);

static void BM_ReductionGrid43(benchmark::State& state) {
  const Graph g = grid(4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(reduction_number(g, 1).value);
}
BENCHMARK(BM_ReductionGrid43);

static void BM_DownDiagonal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(down_diagonal_lex(n, n));
}
BENCHMARK(BM_DownDiagonal)->RangeMultiplier(4)->Range(8, 128);

static void BM_ModifiedBoard(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(modified_board_numbering(40, 30, 5));
}
BENCHMARK(BM_ModifiedBoard);

static void BM_VertexIsoperimetric(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Graph g = grid(m, 4);
  for (auto _ : state) benchmark::DoNotOptimize(vertex_isoperimetric(g).value);
}
BENCHMARK(BM_VertexIsoperimetric)->Arg(3)->Arg(4);
BENCHMARK_MAIN();
