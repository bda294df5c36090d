#include <benchmark/benchmark.h>

#include <thread>

#include "brachi/cycloid.hpp"
#include "brachi/segment.hpp"
#include "brachi/solver.hpp"

namespace {

using brachi::GridSpec;
using brachi::ProblemSpec;

void BM_SegmentTime(benchmark::State& state) {
  double y = -2.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(brachi::segment_time(y, -0.3, 0.25, 9.81));
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_SegmentTime);

void BM_SegmentQuadrature(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(brachi::segment_time_quadrature(-1.0, -1.0, 0.25, 9.81, state.range(0)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SegmentQuadrature)->RangeMultiplier(10)->Range(1000, 1'000'000);

void BM_CycloidParams(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(brachi::solve_params(10.0, -5.0));
}
BENCHMARK(BM_CycloidParams);

// Grid sizes along the nested refinement ladder starting at 11 x 21.
void BM_Solve(benchmark::State& state) {
  GridSpec grid = GridSpec::make(ProblemSpec{}, 11, 21);
  for (int64_t level = 0; level < state.range(0); ++level) grid = grid.refined();
  const brachi::SolveOptions options{static_cast<unsigned>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(brachi::solve(grid, options).total_time);
  state.counters["n_x"] = grid.n_x();
  state.counters["n_y"] = grid.n_y();
  state.SetItemsProcessed(state.iterations() * grid.stages() * grid.n_y() * grid.n_u());
}
BENCHMARK(BM_Solve)
    ->ArgsProduct({{0, 1, 2, 3}, {1}})
    ->Args({3, 4})
    ->Args({4, 1})
    ->Args({4, 4})
    ->Unit(benchmark::kMillisecond);

void BM_SolveReference(benchmark::State& state) {
  const GridSpec grid = GridSpec::make(ProblemSpec{}, 41, 101);
  for (auto _ : state) benchmark::DoNotOptimize(brachi::solve(grid).total_time);
}
BENCHMARK(BM_SolveReference)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
