#include <benchmark/benchmark.h>

#include "antcd/generators.hpp"
#include "antcd/maba.hpp"
#include "antcd/metrics.hpp"
#include "antcd/saba.hpp"

namespace {

using namespace antcd;

// Planted-partition graphs with groups of 100 and expected degree 16; the
// argument is the number of groups.
void BM_Maba(benchmark::State& state) {
  const auto inst = gen_gn(static_cast<std::size_t>(state.range(0)), 100, 10, 6, 1);
  SabaConfig cfg;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    cfg.seed = seed++;
    benchmark::DoNotOptimize(run_maba(inst.graph, cfg));
  }
  state.SetComplexityN(state.range(0) * 100);
  state.counters["n"] = static_cast<double>(inst.graph.num_vertices());
}
BENCHMARK(BM_Maba)->RangeMultiplier(2)->Range(10, 160)->Unit(benchmark::kMillisecond)->Complexity();

void BM_Saba(benchmark::State& state) {
  const auto inst = gen_gn(static_cast<std::size_t>(state.range(0)), 100, 10, 6, 1);
  SabaConfig cfg;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    cfg.seed = seed++;
    benchmark::DoNotOptimize(run_saba(inst.graph, Partition::singleton(inst.graph), cfg));
  }
  state.SetComplexityN(state.range(0) * 100);
}
BENCHMARK(BM_Saba)->RangeMultiplier(2)->Range(10, 160)->Unit(benchmark::kMillisecond)->Complexity();

void BM_Modularity(benchmark::State& state) {
  const auto inst = gen_gn(static_cast<std::size_t>(state.range(0)), 100, 10, 6, 1);
  for (auto _ : state) benchmark::DoNotOptimize(modularity(inst.graph, inst.truth));
}
BENCHMARK(BM_Modularity)->Arg(10)->Arg(100);

void BM_Coarsen(benchmark::State& state) {
  const auto inst = gen_gn(static_cast<std::size_t>(state.range(0)), 100, 10, 6, 1);
  for (auto _ : state) benchmark::DoNotOptimize(coarsen(inst.graph, inst.truth));
}
BENCHMARK(BM_Coarsen)->Arg(10)->Arg(100);

void BM_GenerateGn(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gen_gn(static_cast<std::size_t>(state.range(0)), 100, 10, 6, seed++));
  }
}
BENCHMARK(BM_GenerateGn)->Arg(10)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
