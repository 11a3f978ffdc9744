#include <benchmark/benchmark.h>

#include "rpiso/clifford.hpp"
#include "rpiso/profile.hpp"
#include "rpiso/specfn.hpp"
#include "rpiso/spectrum.hpp"
#include "rpiso/willmore.hpp"

namespace {

void BM_RegIncBeta(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rpiso::reg_inc_beta(x, 3.5, 4.0));
    x = x < 0.9 ? x + 0.001 : 0.1;
  }
}
BENCHMARK(BM_RegIncBeta);

void BM_CossinQuadrature(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rpiso::cossin_integral(4, 5, 1.1));
}
BENCHMARK(BM_CossinQuadrature);

void BM_CossinClosed(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rpiso::cossin_integral_closed(4, 5, 1.1));
}
BENCHMARK(BM_CossinClosed);

void BM_StabilityMargin(benchmark::State& state) {
  const rpiso::CliffordShape shape(3, 4, 0.8);
  for (auto _ : state) benchmark::DoNotOptimize(rpiso::stability_margin(shape));
}
BENCHMARK(BM_StabilityMargin);

void BM_ProfileCurve(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rpiso::profile_curve(dim, 2000));
}
BENCHMARK(BM_ProfileCurve)->Arg(3)->Arg(7)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_TransitionVolumes(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rpiso::transition_volumes(7));
}
BENCHMARK(BM_TransitionVolumes)->Unit(benchmark::kMillisecond);

void BM_EnergyMinimum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rpiso::energy_minimum(n, 10000));
}
BENCHMARK(BM_EnergyMinimum)->Arg(3)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
