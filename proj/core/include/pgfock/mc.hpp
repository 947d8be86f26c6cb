#ifndef PGFOCK_MC_HPP
#define PGFOCK_MC_HPP

#include <cstdint>
#include <functional>

#include "pgfock/rng.hpp"

namespace pgfock {

struct MeanSE {
    double mean = 0.0;
    double se = 0.0; // standard error of the mean
    std::uint64_t n = 0;
};

/// Deterministic parallel Monte Carlo: samples are split into fixed-size
/// batches, batch i draws from RngStream(master_seed, stream_base + i), and
/// the per-batch partial sums are reduced in batch order. The estimate is
/// therefore independent of the worker-thread count.
///
/// `sample` must be pure given its stream.
MeanSE mc_estimate(std::uint64_t samples, std::uint64_t master_seed, std::uint64_t stream_base,
                   int threads, const std::function<double(RngStream&)>& sample);

/// Combined standard error of a difference of independent estimates.
inline double combined_se(const MeanSE& a, const MeanSE& b) {
    return std::sqrt(a.se * a.se + b.se * b.se);
}

/// Stream-id block reserved per estimator so estimates in one suite never
/// share streams: estimator k uses stream_base = k * kStreamBlock.
inline constexpr std::uint64_t kStreamBlock = 1ull << 32;

} // namespace pgfock

#endif
