#include "pgfock/mc.hpp"

#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

namespace pgfock {

namespace {
constexpr std::uint64_t kBatchSize = 4096;
}

MeanSE mc_estimate(std::uint64_t samples, std::uint64_t master_seed, std::uint64_t stream_base,
                   int threads, const std::function<double(RngStream&)>& sample) {
    if (samples == 0) return {};
    const std::uint64_t batches = (samples + kBatchSize - 1) / kBatchSize;
    std::vector<double> sum(batches, 0.0), sumsq(batches, 0.0);

    auto run_batch = [&](std::uint64_t b) {
        RngStream rng(master_seed, stream_base + b);
        const std::uint64_t lo = b * kBatchSize;
        const std::uint64_t hi = std::min(samples, lo + kBatchSize);
        double s = 0.0, s2 = 0.0;
        for (std::uint64_t i = lo; i < hi; ++i) {
            const double v = sample(rng);
            s += v;
            s2 += v * v;
        }
        sum[b] = s;
        sumsq[b] = s2;
    };

    const unsigned hw = std::thread::hardware_concurrency();
    const unsigned nthreads =
        threads > 0 ? static_cast<unsigned>(threads) : (hw > 0 ? hw : 1u);
    if (nthreads <= 1 || batches == 1) {
        for (std::uint64_t b = 0; b < batches; ++b) run_batch(b);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (unsigned t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    const std::uint64_t b = next.fetch_add(1);
                    if (b >= batches) return;
                    run_batch(b);
                }
            });
        for (auto& th : pool) th.join();
    }

    // fixed reduction order
    double total = 0.0, total2 = 0.0;
    for (std::uint64_t b = 0; b < batches; ++b) {
        total += sum[b];
        total2 += sumsq[b];
    }
    const double n = static_cast<double>(samples);
    const double mean = total / n;
    double var = (total2 - n * mean * mean) / (n > 1 ? n - 1 : 1);
    if (var < 0.0) var = 0.0;
    return {mean, std::sqrt(var / n), samples};
}

} // namespace pgfock
