#ifndef PGFOCK_RNG_HPP
#define PGFOCK_RNG_HPP

#include <cstdint>
#include <random>

namespace pgfock {

/// Splittable random stream: (master seed, stream index) -> independent
/// generator. Batches of a Monte Carlo run own consecutive stream indices,
/// so results do not depend on the number of worker threads.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
        : engine_(mix(master_seed, stream_index)) {}

    std::mt19937_64& engine() { return engine_; }

    double uniform() {
        return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
    }
    double uniform(double a, double b) {
        return std::uniform_real_distribution<double>(a, b)(engine_);
    }
    std::uint64_t poisson(double mean) {
        return static_cast<std::uint64_t>(
            std::poisson_distribution<long long>(mean)(engine_));
    }

private:
    // SplitMix64 over the concatenated key; decorrelates nearby indices.
    static std::uint64_t splitmix(std::uint64_t& state) {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t s = seed;
        std::uint64_t a = splitmix(s);
        s ^= index * 0xd2b74407b1ce6e93ULL + 0x8cb92ba72f3d8dd7ULL;
        std::uint64_t b = splitmix(s);
        return a ^ (b + 0x165667b19e3779f9ULL);
    }

    std::mt19937_64 engine_;
};

} // namespace pgfock

#endif
