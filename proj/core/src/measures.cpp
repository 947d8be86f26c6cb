#include "pgfock/measures.hpp"

#include <boost/math/special_functions/expint.hpp>
#include <cmath>

namespace pgfock {

namespace {

std::vector<std::vector<double>> breaks_for(const TestFunction& f, const Window& w) {
    std::vector<std::vector<double>> out(static_cast<size_t>(w.dim()));
    for (int ax = 0; ax < w.dim(); ++ax)
        out[static_cast<size_t>(ax)] = f.breakpoints(ax, w.box());
    return out;
}

std::vector<std::vector<double>> merged_breaks(const TestFunction& f, const TestFunction& g,
                                               const Window& w) {
    std::vector<std::vector<double>> out(static_cast<size_t>(w.dim()));
    for (int ax = 0; ax < w.dim(); ++ax) {
        std::vector<double> a = f.breakpoints(ax, w.box());
        std::vector<double> b = g.breakpoints(ax, w.box());
        a.insert(a.end(), b.begin(), b.end());
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        out[static_cast<size_t>(ax)] = std::move(a);
    }
    return out;
}

} // namespace

IntensityMeasure::IntensityMeasure(const Window& window, TestFunction density,
                                   int quadrature_order)
    : window_(window), density_(std::move(density)), order_(quadrature_order) {
    rule_ = std::make_shared<const QuadratureRule>(window_, order_, breaks_for(density_, window_));
    double mass = 0.0;
    for (const QuadNode& q : rule_->nodes()) {
        const double d = density_(q.x);
        if (!(d > 0.0))
            throw DomainError("IntensityMeasure: density must be strictly positive on the window");
        mass += q.w * d;
    }
    total_mass_ = mass;
    if (!(total_mass_ > 0.0) || !std::isfinite(total_mass_))
        throw DomainError("IntensityMeasure: total mass must be finite and positive");
    density_bound_ = density_.range_on(window_).hi;
}

QuadratureRule IntensityMeasure::rule_for(const TestFunction& f) const {
    return QuadratureRule(window_, order_, merged_breaks(f, density_, window_));
}

double integrate(const TestFunction& f, const IntensityMeasure& sigma) {
    const QuadratureRule rule = sigma.rule_for(f);
    double acc = 0.0;
    for (const QuadNode& q : rule.nodes()) acc += q.w * f(q.x) * sigma.density()(q.x);
    return acc;
}

double inner_l2(const TestFunction& f, const TestFunction& g, const IntensityMeasure& sigma) {
    return integrate(f * g, sigma);
}

IntensityMeasure perturb_sigma(const IntensityMeasure& sigma, const TestFunction& eta) {
    const Interval r = eta.range_on(sigma.window());
    if (!(r.lo > -1.0))
        throw DomainError("perturb_sigma: eta must satisfy inf eta > -1 on the window");
    const TestFunction d = sigma.density() * (TestFunction::constant(1.0) + eta);
    return IntensityMeasure(sigma.window(), d, sigma.quadrature_order());
}

LevyMeasure LevyMeasure::discrete(std::vector<Atom> atoms) {
    if (atoms.empty()) throw DomainError("LevyMeasure::discrete: needs at least one atom");
    double mass = 0.0;
    for (const Atom& a : atoms) {
        if (a.jump == 0.0) throw DomainError("LevyMeasure::discrete: rho({0}) must be 0");
        if (!(a.weight > 0.0)) throw DomainError("LevyMeasure::discrete: weights must be positive");
        mass += a.weight;
    }
    LevyMeasure m;
    m.atoms_ = std::move(atoms);
    m.sampled_mass_ = mass;
    return m;
}

LevyMeasure LevyMeasure::gamma(double epsilon) {
    if (!(epsilon > 0.0) || !(epsilon < 1.0))
        throw DomainError("LevyMeasure::gamma: truncation epsilon must lie in (0, 1)");
    LevyMeasure m;
    m.is_gamma_ = true;
    m.epsilon_ = epsilon;
    m.sampled_mass_ = boost::math::expint(1, epsilon); // E_1(eps) = mass of 1_{s>=eps} e^{-s}/s ds
    return m;
}

MaybeDiverges LevyMeasure::total_mass() const {
    if (is_gamma_) return std::nullopt;
    return sampled_mass_;
}

namespace {

double ipow(double v, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= v;
    return r;
}

/// integral_epsilon^inf (e^{su}-1) e^{-s}/s ds for u < 1, tail below ~1e-12.
double gamma_psi(double epsilon, double u) {
    if (u == 0.0) return 0.0;
    // tail of the integrand is bounded by e^{-s(1-u)}/s (u>0) or e^{-s}/s (u<=0)
    const double rate = u > 0.0 ? 1.0 - u : 1.0;
    double smax = 1.0;
    while (std::exp(-rate * smax) / (rate * smax) > 1e-13 && smax < 1e4) smax *= 1.5;
    // log-spaced panels resolve the 1/s factor near epsilon
    std::vector<double> knots;
    const int panels = 24;
    for (int i = 0; i <= panels; ++i)
        knots.push_back(epsilon * std::pow(smax / epsilon, static_cast<double>(i) / panels));
    return integrate_panels(knots, 32, [&](double s) {
        return std::expm1(s * u) * std::exp(-s) / s;
    });
}

} // namespace

double kolmogorov_characteristic(const LevyMeasure& rho, double u) {
    if (!rho.is_gamma()) {
        double acc = 0.0;
        for (const LevyMeasure::Atom& a : rho.atoms()) acc += a.weight * std::expm1(a.jump * u);
        return acc;
    }
    if (u >= 1.0)
        throw DomainError("kolmogorov_characteristic: GammaLevy requires u < 1");
    return gamma_psi(rho.epsilon(), u);
}

MaybeDiverges levy_moment(const LevyMeasure& rho, int n) {
    if (n < 0) throw DomainError("levy_moment: order must be >= 0");
    if (!rho.is_gamma()) {
        double acc = 0.0;
        for (const LevyMeasure::Atom& a : rho.atoms()) acc += a.weight * ipow(std::fabs(a.jump), n);
        return acc;
    }
    if (n == 0) return std::nullopt; // rho(R) = infinity
    // integral_0^inf s^{n-1} e^{-s} ds = Gamma(n) = (n-1)!
    double g = 1.0;
    for (int k = 2; k < n; ++k) g *= k;
    return g;
}

MaybeDiverges levy_moment_signed(const LevyMeasure& rho, int n) {
    if (n < 0) throw DomainError("levy_moment_signed: order must be >= 0");
    if (!rho.is_gamma()) {
        double acc = 0.0;
        for (const LevyMeasure::Atom& a : rho.atoms()) acc += a.weight * ipow(a.jump, n);
        return acc;
    }
    return levy_moment(rho, n); // one-sided support: signed == absolute
}

AnalyticityReport levy_analyticity(const LevyMeasure& rho, int n_max) {
    double c = 0.0;
    bool holds = true;
    double factorial = 1.0;
    for (int n = 1; n <= n_max; ++n) {
        factorial *= n;
        const MaybeDiverges m = levy_moment(rho, n);
        if (!m) {
            holds = false;
            continue;
        }
        c = std::max(c, std::pow(*m / factorial, 1.0 / n));
    }
    return {c, holds};
}

double laplace(LaplaceKind kind, const TestFunction& phi, const IntensityMeasure& sigma,
               const LevyMeasure* rho) {
    const QuadratureRule rule = sigma.rule_for(phi);
    switch (kind) {
    case LaplaceKind::Poisson: {
        double acc = 0.0;
        for (const QuadNode& q : rule.nodes())
            acc += q.w * std::expm1(phi(q.x)) * sigma.density()(q.x);
        return std::exp(acc);
    }
    case LaplaceKind::Compound: {
        if (rho == nullptr) throw DomainError("laplace: compound kind needs a Levy measure");
        if (rho->is_gamma()) {
            const Interval r = phi.range_on(sigma.window());
            if (!(r.hi < 1.0))
                throw DomainError("laplace: compound GammaLevy requires sup phi < 1");
        }
        double acc = 0.0;
        for (const QuadNode& q : rule.nodes())
            acc += q.w * kolmogorov_characteristic(*rho, phi(q.x)) * sigma.density()(q.x);
        return std::exp(acc);
    }
    case LaplaceKind::Gamma: {
        const Interval r = phi.range_on(sigma.window());
        if (!(r.hi < 1.0)) throw DomainError("laplace: gamma kind requires sup phi < 1");
        double acc = 0.0;
        for (const QuadNode& q : rule.nodes())
            acc += q.w * std::log1p(-phi(q.x)) * sigma.density()(q.x);
        return std::exp(-acc);
    }
    }
    return 0.0;
}

} // namespace pgfock
