// Serial reference vs OpenMP kernels. Both paths return identical results;
// only wall time differs.
#include "logcoef/bounds.hpp"
#include "logcoef/probe.hpp"
#include "logcoef/verify.hpp"

#include <benchmark/benchmark.h>

using namespace logcoef;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void set_label(benchmark::State& state) { state.SetLabel(state.range(0) ? "parallel" : "serial"); }

void BM_coverage_scan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(coverage_scan(200, exec_of(state)));
  set_label(state);
}

void BM_sample_batch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sample_batch(7, 64, 3, exec_of(state)));
  set_label(state);
}

void BM_monte_carlo(benchmark::State& state) {
  const std::vector<SchwarzSample> omegas = sample_batch(7, 128, 32);
  const ClassSpec spec = ClassSpec::janowski(Real(1), Real(-1));
  const std::vector<WeightSpec> weights = {WeightSpec::n_squared()};
  for (auto _ : state) benchmark::DoNotOptimize(monte_carlo_class(spec, omegas, 7, 32, weights, exec_of(state)));
  set_label(state);
}

void BM_scan_theta(benchmark::State& state) {
  std::vector<Real> eps;
  for (int k = 1; k <= 16; ++k) eps.push_back(exp2i(-4 * k));
  for (auto _ : state)
    benchmark::DoNotOptimize(scan_theta(Real(1), eps, PrecisionContext{256}, exec_of(state)));
  set_label(state);
}

}  // namespace

BENCHMARK(BM_coverage_scan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_sample_batch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_monte_carlo)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_scan_theta)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
