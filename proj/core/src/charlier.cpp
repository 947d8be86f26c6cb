#include "pgfock/charlier.hpp"

#include <cmath>
#include <unordered_map>

#include "pgfock/mc.hpp"
#include "pgfock/series.hpp"

namespace pgfock {

double normalized_exp_poisson(const TestFunction& phi, const Configuration& gamma,
                              const IntensityMeasure& sigma) {
    return normalized_exp_fn(phi, sigma)(gamma);
}

PoissonFn normalized_exp_fn(const TestFunction& phi, const IntensityMeasure& sigma) {
    const Interval r = phi.range_on(sigma.window());
    if (!(r.lo > -1.0))
        throw DomainError("normalized_exp_poisson: requires inf phi > -1");
    const double mean = integrate(phi, sigma);
    const double front = std::exp(-mean);
    return [phi, front](const Configuration& gamma) {
        double prod = front;
        for (const Point& x : gamma.points()) prod *= 1.0 + phi(x);
        return prod;
    };
}

CharlierSymbols charlier_symbols(const Configuration& gamma, const TestFunction& phi, int n,
                                 const IntensityMeasure& sigma) {
    CharlierSymbols s;
    s.mean = integrate(phi, sigma);
    s.power_sums.resize(static_cast<size_t>(n));
    std::vector<double> values(gamma.size());
    for (size_t j = 0; j < gamma.size(); ++j) values[j] = phi(gamma[j]);
    std::vector<double> powers = values;
    for (int k = 1; k <= n; ++k) {
        double acc = 0.0;
        for (size_t j = 0; j < powers.size(); ++j) acc += powers[j];
        s.power_sums[static_cast<size_t>(k - 1)] = acc;
        if (k < n)
            for (size_t j = 0; j < powers.size(); ++j) powers[j] *= values[j];
    }
    return s;
}

std::vector<double> charlier_eval_all(const CharlierSymbols& symbols, int n) {
    if (n < 0 || n > kMaxChaosLevel)
        throw SizeError("charlier_eval: level must lie in [0, 10]");
    TruncatedSeries<double> log_series(n);
    for (int k = 1; k <= n; ++k) {
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        log_series[static_cast<size_t>(k)] =
            sign * symbols.power_sums[static_cast<size_t>(k - 1)] / k;
    }
    if (n >= 1) log_series[1] -= symbols.mean;
    const TruncatedSeries<double> e = series_exp(log_series);
    std::vector<double> out(static_cast<size_t>(n) + 1);
    double factorial = 1.0;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) factorial *= k;
        out[static_cast<size_t>(k)] = factorial * e[static_cast<size_t>(k)];
    }
    return out;
}

double charlier_eval(const Configuration& gamma, const TestFunction& phi, int n,
                     const IntensityMeasure& sigma) {
    if (n < 0 || n > kMaxChaosLevel)
        throw SizeError("charlier_eval: level must lie in [0, 10]");
    const CharlierSymbols s = charlier_symbols(gamma, phi, n, sigma);
    return charlier_eval_all(s, n)[static_cast<size_t>(n)];
}

double poisson_gradient(const PoissonFn& f, const Configuration& gamma, const Point& x) {
    return f(gamma.add_atom(x)) - f(gamma);
}

Point nudge_off_atoms(Point x, const Configuration& gamma) {
    while (gamma.contains(x)) x[0] = std::nextafter(x[0], std::numeric_limits<double>::infinity());
    return x;
}

double directional_gradient(const PoissonFn& f, const TestFunction& phi,
                            const Configuration& gamma, const IntensityMeasure& sigma) {
    const double base = f(gamma);
    const QuadratureRule rule = sigma.rule_for(phi);
    double acc = 0.0;
    for (const QuadNode& q : rule.nodes()) {
        const Point x = nudge_off_atoms(q.x, gamma);
        const double weff = q.w * sigma.density()(q.x) * phi(q.x);
        acc += weff * (f(gamma.add_atom(x)) - base);
    }
    return acc;
}

double creation_apply(const PoissonFn& g, const TestFunction& phi, const Configuration& gamma,
                      const IntensityMeasure& sigma) {
    const double phi_mean = integrate(phi, sigma);
    double acc = 0.0;
    for (size_t j = 0; j < gamma.size(); ++j)
        acc += g(gamma.remove_index(j)) * phi(gamma[j]);
    return acc - g(gamma) * phi_mean;
}

namespace {

/// Memoized (removal-mask, level) -> value recursion for the creation
/// iterate; only subsets of the starting configuration are ever visited.
class CreationIterate {
public:
    CreationIterate(const TestFunction& phi, const Configuration& gamma,
                    const IntensityMeasure& sigma)
        : gamma_(gamma), phi_mean_(integrate(phi, sigma)) {
        if (gamma.size() > 60)
            throw SizeError("creation_iterate: configuration larger than 60 atoms");
        phi_values_.resize(gamma.size());
        for (size_t j = 0; j < gamma.size(); ++j) phi_values_[j] = phi(gamma[j]);
    }

    double value(int level, std::uint64_t removed_mask) {
        if (level == 0) return 1.0;
        const std::uint64_t key =
            removed_mask * 16u + static_cast<std::uint64_t>(level);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        double acc = 0.0;
        for (size_t j = 0; j < gamma_.size(); ++j) {
            const std::uint64_t bit = 1ull << j;
            if (removed_mask & bit) continue;
            acc += value(level - 1, removed_mask | bit) * phi_values_[j];
        }
        const double v = acc - value(level - 1, removed_mask) * phi_mean_;
        memo_.emplace(key, v);
        return v;
    }

private:
    const Configuration& gamma_;
    double phi_mean_;
    std::vector<double> phi_values_;
    std::unordered_map<std::uint64_t, double> memo_;
};

} // namespace

double creation_iterate(int n, const TestFunction& phi, const Configuration& gamma,
                        const IntensityMeasure& sigma) {
    if (n < 0 || n > kMaxChaosLevel)
        throw SizeError("creation_iterate: level must lie in [0, 10]");
    CreationIterate it(phi, gamma, sigma);
    return it.value(n, 0);
}

IdentityResult mecke_check(const MeckeIntegrand& f, const IntensityMeasure& sigma,
                           const McOptions& opt) {
    const MeanSE lhs = mc_estimate(
        opt.samples, opt.seed, opt.stream_base, opt.threads, [&](RngStream& rng) {
            const Configuration gamma = sample_poisson(sigma, rng);
            return pairing(gamma, f.phi) * f.h(gamma);
        });
    const QuadratureRule rule = sigma.rule_for(f.phi);
    const MeanSE rhs = mc_estimate(
        opt.samples, opt.seed, opt.stream_base + kStreamBlock, opt.threads,
        [&](RngStream& rng) {
            const Configuration gamma = sample_poisson(sigma, rng);
            const std::vector<double> y = f.h.pairings(gamma);
            double acc = 0.0;
            for (const QuadNode& q : rule.nodes()) {
                const Point x = nudge_off_atoms(q.x, gamma);
                acc += q.w * sigma.density()(q.x) * f.phi(q.x) * f.h.eval_shifted(y, x);
            }
            return acc;
        });
    IdentityResult r = make_identity("mecke", lhs.mean, rhs.mean, combined_se(lhs, rhs), 0.0);
    r.standard_errors = {{"lhs", lhs.se}, {"rhs", rhs.se}, {"combined", combined_se(lhs, rhs)}};
    return r;
}

IdentityResult rn_check(const TestFunction& eta, const CylinderFunction& F,
                        const IntensityMeasure& sigma, const McOptions& opt) {
    const PoissonFn density = normalized_exp_fn(eta, sigma);
    const IntensityMeasure sigma_eta = perturb_sigma(sigma, eta);
    const MeanSE lhs = mc_estimate(
        opt.samples, opt.seed, opt.stream_base, opt.threads, [&](RngStream& rng) {
            const Configuration gamma = sample_poisson(sigma, rng);
            return F(gamma) * density(gamma);
        });
    const MeanSE rhs = mc_estimate(
        opt.samples, opt.seed, opt.stream_base + kStreamBlock, opt.threads,
        [&](RngStream& rng) { return F(sample_poisson(sigma_eta, rng)); });
    IdentityResult r =
        make_identity("radon-nikodym", lhs.mean, rhs.mean, combined_se(lhs, rhs), 0.0);
    r.standard_errors = {{"lhs", lhs.se}, {"rhs", rhs.se}, {"combined", combined_se(lhs, rhs)}};
    return r;
}

IdentityResult charlier_orthogonality_mc(const TestFunction& phi, const TestFunction& psi,
                                         int n, int m, const IntensityMeasure& sigma,
                                         const McOptions& opt) {
    const double mean_phi = integrate(phi, sigma);
    const double mean_psi = integrate(psi, sigma);
    const MeanSE mc = mc_estimate(
        opt.samples, opt.seed, opt.stream_base, opt.threads, [&](RngStream& rng) {
            const Configuration gamma = sample_poisson(sigma, rng);
            CharlierSymbols sp = charlier_symbols(gamma, phi, n, sigma);
            sp.mean = mean_phi;
            CharlierSymbols sq = charlier_symbols(gamma, psi, m, sigma);
            sq.mean = mean_psi;
            return charlier_eval_all(sp, n)[static_cast<size_t>(n)] *
                   charlier_eval_all(sq, m)[static_cast<size_t>(m)];
        });
    double expected = 0.0;
    if (n == m) {
        const double ip = inner_l2(phi, psi, sigma);
        expected = 1.0;
        for (int k = 1; k <= n; ++k) expected *= k * ip;
    }
    IdentityResult r = make_identity("charlier-orthogonality[" + std::to_string(n) + "," +
                                         std::to_string(m) + "]",
                                     mc.mean, expected, mc.se, 0.0);
    r.standard_errors = {{"mc", mc.se}};
    return r;
}

} // namespace pgfock
