#include <vector>

#include <benchmark/benchmark.h>

#include "telegraph/densities.hpp"
#include "telegraph/extrema.hpp"
#include "telegraph/first_passage.hpp"
#include "telegraph/kac.hpp"
#include "telegraph/series.hpp"

using namespace telegraph;

static const TelegraphParams kParams(2, 0.5, 3, -1);

static void BM_SeriesI0(benchmark::State& state) {
  const double z = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(log_series_I0arg(z));
}
BENCHMARK(BM_SeriesI0)->Arg(1)->Arg(100)->Arg(2000)->Arg(100000);

static void BM_PositionDensity(benchmark::State& state) {
  double x = -1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(position_density(kParams, State::Zero, 1.0, x));
    x = x > 2.9 ? -1.0 : x + 0.01;
  }
}
BENCHMARK(BM_PositionDensity);

static void BM_PositionLawMass(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(position_law(kParams, State::One, 1.7).total_mass());
}
BENCHMARK(BM_PositionLawMass)->Unit(benchmark::kMicrosecond);

static void BM_FptLawMass(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fpt_law(kParams, State::Zero, 1.0).total_mass());
}
BENCHMARK(BM_FptLawMass)->Unit(benchmark::kMillisecond);

static void BM_FptCdfTable(benchmark::State& state) {
  const MixedLaw law = fpt_law(kParams, State::Zero, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(law.tabulate_cdf(2048, 20.0).total());
}
BENCHMARK(BM_FptCdfTable)->Unit(benchmark::kMillisecond);

static void BM_ExtremaMasses(benchmark::State& state) {
  const auto kind = state.range(0) == 0 ? ExtremumKind::Min : ExtremumKind::Max;
  for (auto _ : state) {
    benchmark::DoNotOptimize(JointExtremumLaw(kParams, State::Zero, kind, 1.5).masses().total());
  }
}
BENCHMARK(BM_ExtremaMasses)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_ExtremaMarginal(benchmark::State& state) {
  const JointExtremumLaw law(kParams, State::One, ExtremumKind::Min, 1.5);
  for (auto _ : state) benchmark::DoNotOptimize(law.x_marginal_density(0.4));
}
BENCHMARK(BM_ExtremaMarginal)->Unit(benchmark::kMicrosecond);

static void BM_KacConvergence(benchmark::State& state) {
  const std::vector<double> ks{1, 2, 4, 8, 16};
  const std::vector<double> ts = uniform_time_grid(0.01, 10, 1000);
  for (auto _ : state) benchmark::DoNotOptimize(convergence_check({1, 1, 0}, 1.0, ks, ts));
}
BENCHMARK(BM_KacConvergence)->Unit(benchmark::kMillisecond);
