#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include <wbirkhoff/wbirkhoff.hpp>

using namespace wbirkhoff;

namespace {

const double kSilver = std::sqrt(2.0) - 1;

std::vector<double> samples(std::size_t n) {
  std::vector<double> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = std::exp(std::cos(2 * M_PI * frac_product<double>(i, kSilver)));
  return f;
}

void BM_Weights(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(normalized_weights<double>(WeightKind::exponential(1), n));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Weights)->Arg(10000)->Arg(1000000);

void BM_WbAverage(benchmark::State& state) {
  const auto f = samples(static_cast<std::size_t>(state.range(0)));
  const auto w = normalized_weights<double>(WeightKind::exponential(1), f.size());
  for (auto _ : state) benchmark::DoNotOptimize(wb_average<double>(f, w));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_WbAverage)->Arg(10000)->Arg(1000000);

void BM_WbAverageExtended(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Extended> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = Extended(std::cos(0.1 * i));
  const auto w = normalized_weights<Extended>(WeightKind::exponential(1), n);
  for (auto _ : state) benchmark::DoNotOptimize(wb_average<Extended>(f, w));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_WbAverageExtended)->Arg(100000);

void BM_FourierKernel(benchmark::State& state) {
  const auto f = samples(100000);
  const auto w = normalized_weights<double>(WeightKind::exponential(1), f.size());
  const int kmax = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fourier_coefficients<double>(f, kSilver, kmax, w));
  state.SetItemsProcessed(state.iterations() * f.size() * (kmax + 1));
}
BENCHMARK(BM_FourierKernel)->Arg(60)->Arg(250)->Unit(benchmark::kMillisecond);

void BM_StandardMapOrbit(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(standard_map_orbit<double>({1.159692208627139, 0.0}, 1.0, n));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_StandardMapOrbit)->Arg(100000);

void BM_TorusMapOrbit(benchmark::State& state) {
  const auto params = TorusMapParams<double>::reference();
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(torus_map_orbit<double>({0, 0}, params, n));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TorusMapOrbit)->Arg(100000);

void BM_Lift(benchmark::State& state) {
  auto orbit = standard_map_orbit<double>({1.159692208627139, 0.0}, 1.0, 100000);
  auto th = torus_angular_coordinate<double>(orbit, {M_PI, 0.0}, two_pi_v<double>());
  for (auto _ : state) benchmark::DoNotOptimize(build_lift<double>(th, 1, LiftBranch::Auto));
}
BENCHMARK(BM_Lift);

void BM_DeltaScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(delta_scan<double>(M_PI - 3, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DeltaScan)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_Dop853Step(benchmark::State& state) {
  const double p2 = r3bp_momentum_for_energy(-0.15, -2.63, 0.1);
  State<double, 4> y{-0.15, 0, 0, p2};
  const R3bpField<double> f{0.1};
  for (auto _ : state) {
    y = rk_step<double, 4>(f, 0.0, y, 2e-4);
    benchmark::DoNotOptimize(y);
  }
}
BENCHMARK(BM_Dop853Step);

}  // namespace
BENCHMARK_MAIN();
