#include <benchmark/benchmark.h>

#include "telegraph/montecarlo.hpp"

using namespace telegraph;

static void BM_SamplePath(benchmark::State& state) {
  SimulationConfig config{.params = TelegraphParams(1, 1, 1, -1)};
  config.horizon = static_cast<double>(state.range(0));
  std::uint64_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_path(config, k++));
}
BENCHMARK(BM_SamplePath)->Arg(2)->Arg(20)->Arg(200);

static void BM_Campaign(benchmark::State& state) {
  SimulationConfig config{.params = TelegraphParams(1, 1, 1, -1)};
  config.horizon = 2.0;
  config.threshold = 1.0;
  config.fpt_horizon = 20.0;
  config.paths = 20000;
  config.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_campaign(config).terminal_mean);
  state.SetItemsProcessed(state.iterations() * 20000);
}
BENCHMARK(BM_Campaign)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
