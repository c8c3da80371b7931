#include <benchmark/benchmark.h>

#include <numeric>

#include "dfvs/digraph.hpp"
#include "dfvs/generators.hpp"
#include "dfvs/scc.hpp"
#include "dfvs/separators.hpp"
#include "dfvs/solver.hpp"

namespace {

using namespace dfvs;

PlantedInstance planted(std::size_t m) { return gen_planted(m / 4, m, 3, 1); }

void BM_Scc(benchmark::State& state) {
  auto inst = planted(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(scc_decompose(inst.graph));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Scc)->RangeMultiplier(2)->Range(1 << 14, 1 << 18)->Complexity(benchmark::oN);

void BM_Induced(benchmark::State& state) {
  auto inst = planted(static_cast<std::size_t>(state.range(0)));
  VertexList keep(inst.graph.num_vertices() / 2);
  std::iota(keep.begin(), keep.end(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(induced(inst.graph, keep));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Induced)->RangeMultiplier(2)->Range(1 << 14, 1 << 18)->Complexity(benchmark::oN);

void BM_SeparatorLayers(benchmark::State& state) {
  auto inst = planted(static_cast<std::size_t>(state.range(0)));
  const Vertex s = inst.planted[0];
  const Vertex t = inst.planted[1];
  for (auto _ : state) benchmark::DoNotOptimize(separator_layers(inst.graph, s, t, 3));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SeparatorLayers)->RangeMultiplier(2)->Range(1 << 14, 1 << 18)->Complexity(benchmark::oN);

void BM_SolvePlanted(benchmark::State& state) {
  auto inst = planted(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_dfvs(inst.graph, 3, SolveOptions{false}));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolvePlanted)
    ->RangeMultiplier(2)
    ->Range(1 << 14, 1 << 17)
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oN);

}  // namespace
BENCHMARK_MAIN();
