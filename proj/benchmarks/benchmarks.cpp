#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

#include "nucgrow/dynamics.hpp"
#include "nucgrow/lattice.hpp"
#include "nucgrow/model.hpp"
#include "nucgrow/morphology.hpp"
#include "nucgrow/random_field.hpp"

namespace {

using namespace nucgrow;

ModelParams planar_params(double beta) {
  ModelParams p;
  p.dimension = 2;
  p.gammas = {0, 1, 2};
  p.beta = beta;
  return p;
}

Configuration random_config(const BoxRegion& region, double density,
                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution occupy(density);
  Configuration config(region);
  for (std::uint64_t i = 0; i < region.volume(); ++i)
    if (occupy(rng)) config.set(i);
  return config;
}

// Thinning engine, moderate box, run to a fixed horizon. Throughput is
// arrivals per second since rejected arrivals dominate the work.
void BM_GraphicalEngine(benchmark::State& state) {
  const ModelParams p = planar_params(2.0);
  const BoxRegion region = BoxRegion::centered_cube(2, state.range(0));
  const StopRule stop = StopRule::time_limit(5.0);
  std::uint64_t seed = 0, arrivals = 0;
  for (auto _ : state) {
    const GraphicalField field(seed++, region);
    const Trajectory traj =
        run_graphical(region, p, BoundaryCondition::empty(),
                      ProcessVariant::Full, Configuration(region), field,
                      stop, RunOptions{.record_events = false});
    arrivals += traj.arrivals_processed;
    benchmark::DoNotOptimize(traj.final_config);
  }
  state.counters["arrivals/s"] = benchmark::Counter(
      static_cast<double>(arrivals), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_GraphicalEngine)->Arg(16)->Arg(32)->Arg(64);

// Next-reaction engine on the same workload.
void BM_FastEngine(benchmark::State& state) {
  const ModelParams p = planar_params(2.0);
  const BoxRegion region = BoxRegion::centered_cube(2, state.range(0));
  const StopRule stop = StopRule::time_limit(5.0);
  std::uint64_t seed = 0, arrivals = 0;
  for (auto _ : state) {
    const GraphicalField field(seed++, region);
    const Trajectory traj =
        run_fast(region, p, BoundaryCondition::empty(), ProcessVariant::Full,
                 Configuration(region), field, stop,
                 RunOptions{.record_events = false});
    arrivals += traj.arrivals_processed;
    benchmark::DoNotOptimize(traj.final_config);
  }
  state.counters["candidates/s"] = benchmark::Counter(
      static_cast<double>(arrivals), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_FastEngine)->Arg(16)->Arg(32)->Arg(64);

// The relaxation workload the sweeps run: a long line, stop at the origin.
void BM_FastEngineLine(benchmark::State& state) {
  ModelParams p;
  p.dimension = 1;
  p.gammas = {0.5, 2};
  p.beta = 4.0;
  const BoxRegion region =
      BoxRegion::centered_cube(1, state.range(0));
  const StopRule stop =
      StopRule::origin_occupied() | StopRule::time_limit(1e6);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const GraphicalField field(seed++, region);
    benchmark::DoNotOptimize(
        run_fast(region, p, BoundaryCondition::empty(), ProcessVariant::Full,
                 Configuration(region), field, stop,
                 RunOptions{.record_events = false})
            .final_time);
  }
}
BENCHMARK(BM_FastEngineLine)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_BootstrapClosure(benchmark::State& state) {
  const BoxRegion region = BoxRegion::centered_cube(2, state.range(0));
  const Configuration config = random_config(region, 0.2, 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(bootstrap_closure(config));
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(region.volume()));
}
BENCHMARK(BM_BootstrapClosure)->Arg(64)->Arg(128)->Arg(256);

void BM_Dilate(benchmark::State& state) {
  const BoxRegion region = BoxRegion::centered_cube(2, 128);
  const Configuration config = random_config(region, 0.05, 11);
  for (auto _ : state)
    benchmark::DoNotOptimize(dilate(config, state.range(0)));
}
BENCHMARK(BM_Dilate)->Arg(2)->Arg(4)->Arg(8);

void BM_ConnectedClusters(benchmark::State& state) {
  const BoxRegion region = BoxRegion::centered_cube(2, state.range(0));
  const Configuration config = random_config(region, 0.5, 13);
  for (auto _ : state)
    benchmark::DoNotOptimize(connected_clusters(config));
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(region.volume()));
}
BENCHMARK(BM_ConnectedClusters)->Arg(64)->Arg(256);

void BM_Snapshot(benchmark::State& state) {
  const ModelParams p = planar_params(3.0);
  const BoxRegion region = BoxRegion::centered_cube(2, state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const GraphicalField field(seed++, region);
    benchmark::DoNotOptimize(bernoulli_snapshot(field, p, 0, 8.0));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(region.volume()));
}
BENCHMARK(BM_Snapshot)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
