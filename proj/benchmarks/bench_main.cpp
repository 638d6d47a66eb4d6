#include <benchmark/benchmark.h>

#include "qcross/crossover.hpp"
#include "qcross/sat.hpp"
#include "qcross/schedule.hpp"
#include "qcross/sim/gadgets_sim.hpp"
#include "qcross/sim/simulate.hpp"

namespace {

void BM_ColorClauses(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const qcross::SatInstance inst = qcross::generate_instance(n, 8, 176.0, 7);
  const qcross::CollisionGraph graph = qcross::build_collision_graph(inst);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcross::color_clauses(graph, qcross::ColorStrategy::dsatur));
  }
  state.SetLabel(std::to_string(inst.m()) + " clauses");
}
BENCHMARK(BM_ColorClauses)->Arg(40)->Arg(70)->Unit(benchmark::kMillisecond);

void BM_TacuBranches(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const qcross::sim::Circuit circuit = qcross::sim::tacu_semantic(k, 0.9);
  const qcross::sim::State input = qcross::sim::uniform_state(k);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcross::sim::simulate(circuit, input));
  }
}
BENCHMARK(BM_TacuBranches)->Arg(2)->Arg(3)->Arg(4);

void BM_FindCrossover(benchmark::State& state) {
  const qcross::EngineConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcross::find_crossover(static_cast<double>(state.range(0)), config));
  }
}
BENCHMARK(BM_FindCrossover)->Arg(71)->Arg(623)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
