#include "pgfock/gamma.hpp"

#include <cmath>

#include "pgfock/mc.hpp"
#include "pgfock/sampling.hpp"

namespace pgfock {

double normalized_exp_gamma(const TestFunction& phi, const DiscreteMeasure& omega,
                            const IntensityMeasure& sigma) {
    const Interval r = phi.range_on(sigma.window());
    if (!(r.abs_sup() < 1.0))
        throw DomainError("normalized_exp_gamma: requires sup|phi| < 1");
    double atom_part = 0.0;
    for (const DiscreteMeasure::Atom& a : omega.atoms()) {
        const double v = phi(a.pos);
        atom_part += a.weight * v / (v - 1.0);
    }
    const QuadratureRule rule = sigma.rule_for(phi);
    double log_part = 0.0;
    for (const QuadNode& q : rule.nodes())
        log_part += q.w * std::log1p(-phi(q.x)) * sigma.density()(q.x);
    return std::exp(atom_part - log_part);
}

GammaSymbols gamma_symbols(const DiscreteMeasure& omega, const TestFunction& phi, int n,
                           const IntensityMeasure& sigma) {
    GammaSymbols s;
    s.weighted_power_sums.resize(static_cast<size_t>(n));
    s.mean_powers.resize(static_cast<size_t>(n));
    std::vector<double> values(omega.size());
    {
        size_t j = 0;
        for (const DiscreteMeasure::Atom& a : omega.atoms()) values[j++] = phi(a.pos);
    }
    std::vector<double> powers = values;
    for (int k = 1; k <= n; ++k) {
        double acc = 0.0;
        size_t j = 0;
        for (const DiscreteMeasure::Atom& a : omega.atoms()) acc += a.weight * powers[j++];
        s.weighted_power_sums[static_cast<size_t>(k - 1)] = acc;
        s.mean_powers[static_cast<size_t>(k - 1)] = integrate(phi.pow(k), sigma);
        if (k < n)
            for (size_t i = 0; i < powers.size(); ++i) powers[i] *= values[i];
    }
    return s;
}

std::vector<double> laguerre_eval_all(const GammaSymbols& symbols, int n) {
    if (n < 0 || n > kMaxChaosLevel)
        throw SizeError("laguerre_eval: level must lie in [0, 10]");
    TruncatedSeries<double> g(n);
    for (int k = 1; k <= n; ++k)
        g[static_cast<size_t>(k)] = symbols.mean_powers[static_cast<size_t>(k - 1)] / k -
                                    symbols.weighted_power_sums[static_cast<size_t>(k - 1)];
    const TruncatedSeries<double> e = series_exp(g);
    std::vector<double> out(static_cast<size_t>(n) + 1);
    double factorial = 1.0;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) factorial *= k;
        out[static_cast<size_t>(k)] = factorial * e[static_cast<size_t>(k)];
    }
    return out;
}

double laguerre_eval(const DiscreteMeasure& omega, const TestFunction& phi, int n,
                     const IntensityMeasure& sigma) {
    if (n < 0 || n > kMaxChaosLevel)
        throw SizeError("laguerre_eval: level must lie in [0, 10]");
    return laguerre_eval_all(gamma_symbols(omega, phi, n, sigma), n)[static_cast<size_t>(n)];
}

template <typename S>
S gamma_inner_factorized_from(const std::vector<S>& v, int n) {
    if (n < 0 || n > kMaxChaosLevel)
        throw SizeError("gamma_inner_factorized: level must lie in [0, 10]");
    if (n == 0) return S(1);
    S total(0);
    for (const PartitionType& t : enumerate_partition_types(n)) {
        S coeff(1);
        for (int j = 2; j <= n; ++j) coeff *= S(j); // n!
        S term(1);
        for (int k = 1; k <= n; ++k) {
            const int ik = t.multiplicity[static_cast<size_t>(k - 1)];
            if (ik == 0) continue;
            for (int j = 2; j <= ik; ++j) coeff /= S(j); // / i_k!
            for (int c = 0; c < ik; ++c) {
                coeff /= S(k); // / k^{i_k}
                term *= v[static_cast<size_t>(k - 1)];
            }
        }
        total += coeff * term;
    }
    return total;
}

template <typename S>
S gamma_inner_oracle_from(const std::vector<S>& v, int n) {
    if (n < 0 || n > kMaxChaosLevel)
        throw SizeError("gamma_inner_oracle: level must lie in [0, 10]");
    TruncatedSeries<S> f(n);
    for (int k = 1; k <= n; ++k) f[static_cast<size_t>(k)] = v[static_cast<size_t>(k - 1)] / S(k);
    const TruncatedSeries<S> e = series_exp(f);
    S factorial(1);
    for (int j = 2; j <= n; ++j) factorial *= S(j);
    return factorial * e[static_cast<size_t>(n)];
}

template double gamma_inner_factorized_from<double>(const std::vector<double>&, int);
template Rational gamma_inner_factorized_from<Rational>(const std::vector<Rational>&, int);
template double gamma_inner_oracle_from<double>(const std::vector<double>&, int);
template Rational gamma_inner_oracle_from<Rational>(const std::vector<Rational>&, int);

namespace {

std::vector<double> power_integrals(const TestFunction& phi, const TestFunction& psi, int n,
                                    const IntensityMeasure& sigma) {
    const TestFunction prod = phi * psi;
    std::vector<double> v(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) v[static_cast<size_t>(k - 1)] = integrate(prod.pow(k), sigma);
    return v;
}

std::vector<Rational> power_integrals_exact(const RationalPoly& phi, const RationalPoly& psi,
                                            int n, const RationalMeasure& sigma) {
    const RationalPoly prod = phi * psi;
    std::vector<Rational> v(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k)
        v[static_cast<size_t>(k - 1)] = integrate_exact(prod.pow(k), sigma);
    return v;
}

} // namespace

double gamma_inner_factorized(const TestFunction& phi, const TestFunction& psi, int n,
                              const IntensityMeasure& sigma) {
    return gamma_inner_factorized_from(power_integrals(phi, psi, n, sigma), n);
}

double gamma_inner_oracle(const TestFunction& phi, const TestFunction& psi, int n,
                          const IntensityMeasure& sigma) {
    return gamma_inner_oracle_from(power_integrals(phi, psi, n, sigma), n);
}

RankKernel RankKernel::symmetrized(double coef, const std::vector<TestFunction>& factors) {
    RankKernel k;
    k.level = static_cast<int>(factors.size());
    std::vector<size_t> idx(factors.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    double count = 1.0;
    for (size_t i = 2; i <= factors.size(); ++i) count *= static_cast<double>(i);
    do {
        std::vector<TestFunction> perm;
        perm.reserve(factors.size());
        for (size_t i : idx) perm.push_back(factors[i]);
        k.terms.push_back({coef / count, std::move(perm)});
    } while (std::next_permutation(idx.begin(), idx.end()));
    return k;
}

namespace {

/// Per-subset integrals I(S) = integral prod_{j in S} f_j g_j d sigma for
/// one pair of product terms; S runs over nonempty subsets of {0..n-1}.
template <typename S, typename BlockIntegral>
S partition_sum(int n, const std::vector<SetPartition>& partitions, BlockIntegral&& block) {
    std::vector<S> subset(static_cast<size_t>(1) << n, S(0));
    for (std::uint64_t mask = 1; mask < subset.size(); ++mask)
        subset[mask] = block(mask);
    S total(0);
    for (const SetPartition& p : partitions) {
        S prod(1);
        for (const auto& b : p.blocks) {
            std::uint64_t mask = 0;
            for (int j : b) mask |= (std::uint64_t{1} << j);
            S w(1);
            for (size_t k = 2; k < b.size(); ++k) w *= S(static_cast<int>(k)); // (|B|-1)!
            prod *= w * subset[mask];
        }
        total += prod;
    }
    return total;
}

} // namespace

double gamma_inner_partition(const RankKernel& f, const RankKernel& g,
                             const IntensityMeasure& sigma) {
    if (f.level != g.level) throw DomainError("gamma_inner_partition: level mismatch");
    const int n = f.level;
    if (n < 0 || n > 8) throw SizeError("gamma_inner_partition: level must lie in [0, 8]");
    if (n == 0) return 1.0;
    const std::vector<SetPartition> partitions = enumerate_set_partitions(n);
    double total = 0.0;
    for (const auto& [cf, fs] : f.terms) {
        for (const auto& [cg, gs] : g.terms) {
            const double s = partition_sum<double>(n, partitions, [&](std::uint64_t mask) {
                TestFunction prod = TestFunction::constant(1.0);
                for (int j = 0; j < n; ++j)
                    if (mask & (std::uint64_t{1} << j))
                        prod = prod * fs[static_cast<size_t>(j)] * gs[static_cast<size_t>(j)];
                return integrate(prod, sigma);
            });
            total += cf * cg * s;
        }
    }
    return total;
}

Rational integrate_exact(const RationalPoly& f, const RationalMeasure& sigma) {
    return (f * sigma.density).integrate(sigma.lo, sigma.hi);
}

Rational gamma_inner_factorized_exact(const RationalPoly& phi, const RationalPoly& psi, int n,
                                      const RationalMeasure& sigma) {
    return gamma_inner_factorized_from(power_integrals_exact(phi, psi, n, sigma), n);
}

Rational gamma_inner_oracle_exact(const RationalPoly& phi, const RationalPoly& psi, int n,
                                  const RationalMeasure& sigma) {
    return gamma_inner_oracle_from(power_integrals_exact(phi, psi, n, sigma), n);
}

Rational gamma_inner_partition_exact(const RationalRankKernel& f, const RationalRankKernel& g,
                                     const RationalMeasure& sigma) {
    if (f.level != g.level) throw DomainError("gamma_inner_partition: level mismatch");
    const int n = f.level;
    if (n < 0 || n > 8) throw SizeError("gamma_inner_partition: level must lie in [0, 8]");
    if (n == 0) return Rational(1);
    const std::vector<SetPartition> partitions = enumerate_set_partitions(n);
    Rational total(0);
    for (const auto& [cf, fs] : f.terms) {
        for (const auto& [cg, gs] : g.terms) {
            const Rational s = partition_sum<Rational>(n, partitions, [&](std::uint64_t mask) {
                RationalPoly prod = RationalPoly::constant(1);
                for (int j = 0; j < n; ++j)
                    if (mask & (std::uint64_t{1} << j))
                        prod = prod * fs[static_cast<size_t>(j)] * gs[static_cast<size_t>(j)];
                return integrate_exact(prod, sigma);
            });
            total += cf * cg * s;
        }
    }
    return total;
}

double gamma_annihilation(const CylinderFunction& h, const TestFunction& phi,
                          const DiscreteMeasure& omega, const IntensityMeasure& sigma) {
    const std::vector<double> y = h.pairings(omega);
    const double base = h.generating(y);
    const QuadratureRule rule = sigma.rule_for(phi);
    static thread_local GaussLaguerre glag(64);
    const std::vector<double> knots{0.0, 0.25, 0.5, 0.75, 1.0};
    const double e1 = std::exp(-1.0);
    double acc = 0.0;
    for (const QuadNode& q : rule.nodes()) {
        const Point x = nudge_off_atoms(q.x, omega);
        const double weff = q.w * sigma.density()(q.x) * phi(q.x);
        double inner = integrate_panels(knots, 32, [&](double s) {
            return (h.eval_shifted(y, x, s) - base) * std::exp(-s) / s;
        });
        double tail = 0.0;
        for (size_t i = 0; i < glag.nodes.size(); ++i) {
            const double s = 1.0 + glag.nodes[i];
            tail += glag.weights[i] * (h.eval_shifted(y, x, s) - base) / s;
        }
        acc += weff * (inner + e1 * tail);
    }
    return acc;
}

double classical_laguerre(int n, double alpha, double x) {
    if (n == 0) return 1.0;
    double lm1 = 1.0;                // L_0
    double l = 1.0 + alpha - x;      // L_1
    for (int k = 1; k < n; ++k) {
        const double lp1 = ((2.0 * k + 1.0 + alpha - x) * l - (k + alpha) * lm1) / (k + 1.0);
        lm1 = l;
        l = lp1;
    }
    return l;
}

ClassicalLaguerreSample laguerre_classical_check(double T, double c, const DiscreteMeasure& omega,
                                                 const IntensityMeasure& sigma, int nmax) {
    if (!(c > 0.0) || !(c < 1.0))
        throw DomainError("laguerre_classical_check: c must lie in (0, 1)");
    if (sigma.window().dim() != 1 || sigma.window().axis(0).lo > 0.0 ||
        sigma.window().axis(0).hi < T)
        throw DomainError("laguerre_classical_check: window must contain [0, T]");
    const TestFunction ind = TestFunction::indicator(Box::make1(0.0, T), 1.0);
    const TestFunction phi = ind.scaled(c);
    ClassicalLaguerreSample out;
    out.generating_lhs = normalized_exp_gamma(phi, omega, sigma);
    const double x = pairing(omega, ind);
    out.generating_rhs = std::pow(1.0 - c, -T) * std::exp(-x * c / (1.0 - c));
    const GammaSymbols sym = gamma_symbols(omega, ind, nmax, sigma);
    out.laguerre_values = laguerre_eval_all(sym, nmax);
    out.classical_values.resize(static_cast<size_t>(nmax) + 1);
    for (int n = 0; n <= nmax; ++n)
        out.classical_values[static_cast<size_t>(n)] = classical_laguerre(n, T - 1.0, x);
    return out;
}

namespace {

/// Atom power sums for a fresh omega with the quadrature means reused.
GammaSymbols symbols_with_means(const DiscreteMeasure& omega, const TestFunction& phi, int n,
                                const GammaSymbols& proto) {
    GammaSymbols s;
    s.mean_powers = proto.mean_powers;
    s.weighted_power_sums.assign(static_cast<size_t>(n), 0.0);
    std::vector<double> values(omega.size());
    {
        size_t j = 0;
        for (const DiscreteMeasure::Atom& a : omega.atoms()) values[j++] = phi(a.pos);
    }
    std::vector<double> powers = values;
    for (int k = 1; k <= n; ++k) {
        double acc = 0.0;
        size_t j = 0;
        for (const DiscreteMeasure::Atom& a : omega.atoms()) acc += a.weight * powers[j++];
        s.weighted_power_sums[static_cast<size_t>(k - 1)] = acc;
        if (k < n)
            for (size_t i = 0; i < powers.size(); ++i) powers[i] *= values[i];
    }
    return s;
}

} // namespace

IdentityResult gamma_orthogonality_mc(const TestFunction& phi, const TestFunction& psi, int n,
                                      int m, const IntensityMeasure& sigma, double epsilon,
                                      const McOptions& opt) {
    {
        const Interval rp = phi.range_on(sigma.window());
        const Interval rq = psi.range_on(sigma.window());
        if (!(rp.abs_sup() < 1.0) || !(rq.abs_sup() < 1.0))
            throw DomainError("gamma_orthogonality_mc: requires sup|phi|, sup|psi| < 1");
    }
    const LevyMeasure rho = LevyMeasure::gamma(epsilon);
    // hoist the quadrature means out of the sampling loop
    GammaSymbols proto_p = gamma_symbols(DiscreteMeasure(), phi, n, sigma);
    GammaSymbols proto_q = gamma_symbols(DiscreteMeasure(), psi, m, sigma);
    const MeanSE mc = mc_estimate(
        opt.samples, opt.seed, opt.stream_base, opt.threads, [&](RngStream& rng) {
            const DiscreteMeasure omega = sample_compound_poisson(rho, sigma, rng);
            GammaSymbols sp = symbols_with_means(omega, phi, n, proto_p);
            GammaSymbols sq = symbols_with_means(omega, psi, m, proto_q);
            return laguerre_eval_all(sp, n)[static_cast<size_t>(n)] *
                   laguerre_eval_all(sq, m)[static_cast<size_t>(m)];
        });
    double expected = 0.0;
    if (n == m) {
        double factorial = 1.0;
        for (int k = 2; k <= n; ++k) factorial *= k;
        expected = factorial * gamma_inner_factorized(phi, psi, n, sigma);
    }
    // truncation bias budget: jumps below epsilon carry expected weighted
    // mass (1 - e^{-eps}) sigma(W) <= eps sigma(W); scaled by the level count
    // and the magnitude of the compared value
    const double budget = 10.0 * epsilon * sigma.total_mass() * (n + m + 1) *
                          std::max(1.0, std::fabs(expected));
    IdentityResult r = make_identity("laguerre-orthogonality[" + std::to_string(n) + "," +
                                         std::to_string(m) + "]",
                                     mc.mean, expected, mc.se, budget);
    r.standard_errors = {{"mc", mc.se}};
    return r;
}

} // namespace pgfock
