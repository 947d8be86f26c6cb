#include <benchmark/benchmark.h>

#include "pgfock/partitions.hpp"
#include "pgfock/series.hpp"

using namespace pgfock;

static void BM_SeriesExp(benchmark::State& state) {
    TruncatedSeries<double> f(static_cast<int>(state.range(0)));
    for (int k = 1; k <= f.order(); ++k) f[static_cast<size_t>(k)] = 1.0 / k;
    for (auto _ : state) {
        benchmark::DoNotOptimize(series_exp(f));
    }
}
BENCHMARK(BM_SeriesExp)->Arg(5)->Arg(10);

static void BM_EnumeratePartitions(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_set_partitions(n));
    }
}
BENCHMARK(BM_EnumeratePartitions)->Arg(6)->Arg(8)->Arg(10);

static void BM_FaaDiBruno(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<double> derivs(static_cast<size_t>(n), 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(faa_di_bruno_exp<double>(derivs, 0.2));
    }
}
BENCHMARK(BM_FaaDiBruno)->Arg(4)->Arg(8);
