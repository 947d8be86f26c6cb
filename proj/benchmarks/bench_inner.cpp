#include <benchmark/benchmark.h>

#include "pgfock/gamma.hpp"

using namespace pgfock;

static void BM_GammaInnerPartition(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const IntensityMeasure sigma = IntensityMeasure::lebesgue(Window(0.0, 1.0));
    const TestFunction phi = TestFunction::polynomial({0.5, 1.0});
    const TestFunction psi = TestFunction::polynomial({1.0, -0.3});
    const RankKernel f = RankKernel::power(phi, n);
    const RankKernel g = RankKernel::power(psi, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gamma_inner_partition(f, g, sigma));
    }
}
BENCHMARK(BM_GammaInnerPartition)->Arg(4)->Arg(6)->Arg(8);

static void BM_GammaInnerFactorized(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const IntensityMeasure sigma = IntensityMeasure::lebesgue(Window(0.0, 1.0));
    const TestFunction phi = TestFunction::polynomial({0.5, 1.0});
    const TestFunction psi = TestFunction::polynomial({1.0, -0.3});
    for (auto _ : state) {
        benchmark::DoNotOptimize(gamma_inner_factorized(phi, psi, n, sigma));
    }
}
BENCHMARK(BM_GammaInnerFactorized)->Arg(4)->Arg(8)->Arg(10);

static void BM_LaguerreEval(benchmark::State& state) {
    const IntensityMeasure sigma = IntensityMeasure::lebesgue(Window(0.0, 1.0));
    const TestFunction phi = TestFunction::polynomial({0.0, 0.5});
    RngStream rng(1, 0);
    const DiscreteMeasure omega = sample_compound_poisson(LevyMeasure::gamma(1e-3), sigma, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(laguerre_eval(omega, phi, 4, sigma));
    }
}
BENCHMARK(BM_LaguerreEval);
