#include <benchmark/benchmark.h>

#include "pgfock/sampling.hpp"

using namespace pgfock;

static void BM_SamplePoisson(benchmark::State& state) {
    const IntensityMeasure sigma =
        IntensityMeasure::lebesgue(Window(0.0, static_cast<double>(state.range(0))));
    RngStream rng(1, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_poisson(sigma, rng));
    }
}
BENCHMARK(BM_SamplePoisson)->Arg(1)->Arg(10)->Arg(100);

static void BM_SampleGammaNoise(benchmark::State& state) {
    const IntensityMeasure sigma = IntensityMeasure::lebesgue(Window(0.0, 1.0));
    const LevyMeasure rho = LevyMeasure::gamma(std::pow(10.0, -state.range(0)));
    RngStream rng(1, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_compound_poisson(rho, sigma, rng));
    }
}
BENCHMARK(BM_SampleGammaNoise)->Arg(2)->Arg(3)->Arg(6);

static void BM_GammaJumpInversion(benchmark::State& state) {
    const LevyMeasure rho = LevyMeasure::gamma(1e-3);
    RngStream rng(1, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_levy_jump(rho, rng));
    }
}
BENCHMARK(BM_GammaJumpInversion);
