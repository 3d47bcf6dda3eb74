#include <benchmark/benchmark.h>

#include "cordon/flownet.hpp"
#include "cordon/generate.hpp"
#include "cordon/maxflow.hpp"
#include "cordon/planner.hpp"

namespace {

using namespace cordon;

// One open environment per (side, rectangles); exposed targets set aside as the harness does.
struct Case {
  OccupancyGrid grid;
  std::vector<int> skip;
};

Case make_case(EnvironmentKind kind, int side, int obstacles, int targets) {
  GenSpec s;
  s.kind = kind;
  s.width = s.height = side;
  s.obstacles = obstacles;
  s.targets_min = s.targets_max = targets;
  s.seed = 42;
  Case c{generate_environment(s).grid, {}};
  c.skip = exposed_targets(c.grid);
  return c;
}

void BM_MaxFlowMerged(benchmark::State& state) {
  const Case c = make_case(EnvironmentKind::Open, static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 15);
  std::vector<bool> include(static_cast<std::size_t>(c.grid.target_count()), true);
  for (int id : c.skip) include[static_cast<std::size_t>(id)] = false;
  const FlowNetwork net = attach_merged_sink(build_base_network(c.grid), c.grid, include);
  for (auto _ : state) benchmark::DoNotOptimize(max_flow(net));
  state.SetLabel(std::to_string(net.node_count()) + " nodes");
}
BENCHMARK(BM_MaxFlowMerged)->Args({60, 40})->Args({100, 100})->Args({200, 400})->Unit(benchmark::kMillisecond);

void BM_SolveIndividual(benchmark::State& state) {
  const auto kind = state.range(2) ? EnvironmentKind::Closed : EnvironmentKind::Open;
  const Case c = make_case(kind, static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 15);
  for (auto _ : state) benchmark::DoNotOptimize(solve_individual(c.grid, c.skip));
}
BENCHMARK(BM_SolveIndividual)
    ->Args({60, 20, 0})->Args({60, 110, 0})->Args({100, 100, 0})->Args({60, 100, 1})
    ->Unit(benchmark::kMillisecond);

void BM_SolveHolistic(benchmark::State& state) {
  const auto kind = state.range(2) ? EnvironmentKind::Closed : EnvironmentKind::Open;
  const Case c = make_case(kind, static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 15);
  for (auto _ : state) benchmark::DoNotOptimize(solve_holistic(c.grid, c.skip));
}
BENCHMARK(BM_SolveHolistic)
    ->Args({60, 20, 0})->Args({60, 110, 0})->Args({100, 100, 0})->Args({60, 100, 1})
    ->Unit(benchmark::kMillisecond);

}  // namespace

// The distro benchmark_main archive carries LTO bytecode from another GCC; own main instead.
BENCHMARK_MAIN();
