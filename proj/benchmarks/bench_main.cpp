#include <cmath>
#include <cstdint>

#include <benchmark/benchmark.h>

#include "singular_lrt/calibration.hpp"
#include "singular_lrt/densities.hpp"
#include "singular_lrt/simulation.hpp"
#include "singular_lrt/trinomial.hpp"

namespace {

const double alpha_min = std::atan(1.0 / 3.0);

void bm_pdf_t1(benchmark::State& state) {
  const slrt::DensitySpec spec = slrt::T1Approx{1.0};
  double lambda = 0.5;
  for (auto _ : state) benchmark::DoNotOptimize(slrt::pdf(lambda, spec));
}
BENCHMARK(bm_pdf_t1);

void bm_pdf_t3(benchmark::State& state) {
  const slrt::DensitySpec spec = slrt::T3Approx{1.0, alpha_min};
  double lambda = 0.5;
  for (auto _ : state) benchmark::DoNotOptimize(slrt::pdf(lambda, spec));
}
BENCHMARK(bm_pdf_t3);

void bm_pvalue_t3(benchmark::State& state) {
  const slrt::DensitySpec spec = slrt::T3Approx{static_cast<double>(state.range(0)), alpha_min};
  for (auto _ : state) benchmark::DoNotOptimize(slrt::pvalue(2.0, spec));
}
BENCHMARK(bm_pvalue_t3)->Arg(0)->Arg(3);

void bm_total_variation(benchmark::State& state) {
  const slrt::DensitySpec a = slrt::T3Approx{2.74, alpha_min};
  const slrt::DensitySpec b = slrt::ChiSq{1};
  for (auto _ : state) benchmark::DoNotOptimize(slrt::total_variation(a, b));
}
BENCHMARK(bm_total_variation)->Unit(benchmark::kMillisecond);

void bm_mu_threshold(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(slrt::mu_threshold(5e-4, slrt::ThresholdModel::T1));
  }
}
BENCHMARK(bm_mu_threshold)->Unit(benchmark::kMillisecond);

void bm_lr_statistic(benchmark::State& state) {
  const slrt::TrinomialCounts counts(360, 340, 300);
  for (auto _ : state) {
    benchmark::DoNotOptimize(slrt::lr_statistic(counts, slrt::ModelId::t3()));
  }
}
BENCHMARK(bm_lr_statistic);

void bm_experiment(benchmark::State& state) {
  slrt::ExperimentConfig config;
  config.n = 1000;
  config.replicates = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(slrt::run_experiment(config));
}
BENCHMARK(bm_experiment)->Arg(10'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
