#include "pgfock/compound.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>

#include "pgfock/quadrature.hpp"
#include "pgfock/series.hpp"

namespace pgfock {

MaybeDiverges mark_mean(const MarkedDirection& dir, const LevyMeasure& rho) {
    if (!rho.is_gamma()) {
        double acc = 0.0;
        for (const LevyMeasure::Atom& a : rho.atoms()) acc += a.weight * dir.mark(a.jump);
        return acc;
    }
    if (!dir.mark_poly.empty() && dir.mark_poly[0] != 0.0)
        return std::nullopt; // p_0 != 0 against infinite activity
    // truncated moments: integral_eps^inf s^k e^{-s}/s ds = Gamma(k, eps)
    double acc = 0.0;
    for (size_t k = 1; k < dir.mark_poly.size(); ++k)
        if (dir.mark_poly[k] != 0.0)
            acc += dir.mark_poly[k] *
                   boost::math::tgamma(static_cast<double>(k), rho.epsilon());
    return acc;
}

MarkedFn u_sigma(const CompoundFn& h) {
    return [h](const MarkedConfiguration& gh) { return h(sigma_map(gh)); };
}

CompoundFn u_sigma_inverse(const MarkedFn& fhat) {
    return [fhat](const DiscreteMeasure& omega) { return fhat(sigma_inverse(omega)); };
}

Point nudge_off_atoms(Point x, const DiscreteMeasure& omega) {
    while (omega.contains(x))
        x[0] = std::nextafter(x[0], std::numeric_limits<double>::infinity());
    return x;
}

namespace {

/// Log-spaced knots for the singular part [eps, 1] of the Gamma Levy
/// s-integral.
std::vector<double> gamma_inner_knots(double eps) {
    const int panels = std::max(6, static_cast<int>(std::ceil(-std::log10(eps))) * 3);
    std::vector<double> knots;
    knots.reserve(static_cast<size_t>(panels) + 1);
    for (int i = 0; i <= panels; ++i)
        knots.push_back(eps * std::pow(1.0 / eps, static_cast<double>(i) / panels));
    return knots;
}

} // namespace

double cp_annihilation(const CylinderFunction& h, const MarkedDirection& dir,
                       const DiscreteMeasure& omega, const LevyMeasure& rho,
                       const IntensityMeasure& sigma) {
    const std::vector<double> y = h.pairings(omega);
    const double base = h.generating(y);
    const QuadratureRule rule = sigma.rule_for(dir.spatial);

    double acc = 0.0;
    if (!rho.is_gamma()) {
        for (const QuadNode& q : rule.nodes()) {
            const Point x = nudge_off_atoms(q.x, omega);
            const double weff = q.w * sigma.density()(q.x) * dir.spatial(q.x);
            double inner = 0.0;
            for (const LevyMeasure::Atom& a : rho.atoms())
                inner += a.weight * (dir.mark(a.jump) * (h.eval_shifted(y, x, a.jump) - base));
            acc += weff * inner;
        }
        return acc;
    }

    static thread_local GaussLaguerre glag(64);
    const std::vector<double> knots = gamma_inner_knots(rho.epsilon());
    for (const QuadNode& q : rule.nodes()) {
        const Point x = nudge_off_atoms(q.x, omega);
        const double weff = q.w * sigma.density()(q.x) * dir.spatial(q.x);
        double inner = integrate_panels(knots, 32, [&](double s) {
            return (h.eval_shifted(y, x, s) - base) * dir.mark(s) * std::exp(-s) / s;
        });
        const double e1 = std::exp(-1.0);
        double tail = 0.0;
        for (size_t i = 0; i < glag.nodes.size(); ++i) {
            const double s = 1.0 + glag.nodes[i];
            tail += glag.weights[i] * (h.eval_shifted(y, x, s) - base) * dir.mark(s) / s;
        }
        inner += e1 * tail;
        acc += weff * inner;
    }
    return acc;
}

MaybeDiverges cp_creation(const CylinderFunction& g, const MarkedDirection& dir,
                          const DiscreteMeasure& omega, const LevyMeasure& rho,
                          const IntensityMeasure& sigma) {
    const MaybeDiverges pmean = mark_mean(dir, rho);
    if (!pmean) return std::nullopt;
    const double phi_mean = integrate(dir.spatial, sigma);
    const std::vector<double> y = g.pairings(omega);
    double acc = 0.0;
    for (const DiscreteMeasure::Atom& a : omega.atoms())
        acc += g.eval_shifted(y, a.pos, -a.weight) * (dir.mark(a.weight) * dir.spatial(a.pos));
    return acc - g.generating(y) * (*pmean * phi_mean);
}

MaybeDiverges cp_charlier_eval(const DiscreteMeasure& omega, const MarkedDirection& dir, int n,
                               const LevyMeasure& rho, const IntensityMeasure& sigma) {
    if (n < 0 || n > kMaxChaosLevel)
        throw SizeError("cp_charlier_eval: level must lie in [0, 10]");
    const MaybeDiverges pmean = mark_mean(dir, rho);
    if (!pmean) return std::nullopt;
    CharlierSymbols s;
    s.mean = *pmean * integrate(dir.spatial, sigma);
    s.power_sums.resize(static_cast<size_t>(n));
    std::vector<double> values(omega.size());
    {
        size_t j = 0;
        for (const DiscreteMeasure::Atom& a : omega.atoms())
            values[j++] = dir.mark(a.weight) * dir.spatial(a.pos);
    }
    std::vector<double> powers = values;
    for (int k = 1; k <= n; ++k) {
        double acc = 0.0;
        for (size_t j = 0; j < powers.size(); ++j) acc += powers[j];
        s.power_sums[static_cast<size_t>(k - 1)] = acc;
        if (k < n)
            for (size_t j = 0; j < powers.size(); ++j) powers[j] *= values[j];
    }
    return charlier_eval_all(s, n)[static_cast<size_t>(n)];
}

double directional_gradient(const CylinderFunction& f, const TestFunction& phi,
                            const Configuration& gamma, const IntensityMeasure& sigma) {
    const std::vector<double> y = f.pairings(gamma);
    const double base = f.generating(y);
    const QuadratureRule rule = sigma.rule_for(phi);
    double acc = 0.0;
    for (const QuadNode& q : rule.nodes()) {
        const Point x = nudge_off_atoms(q.x, gamma);
        const double weff = q.w * sigma.density()(q.x) * phi(q.x);
        acc += weff * (f.eval_shifted(y, x) - base);
    }
    return acc;
}

double creation_apply(const CylinderFunction& g, const TestFunction& phi,
                      const Configuration& gamma, const IntensityMeasure& sigma) {
    const double phi_mean = integrate(phi, sigma);
    const std::vector<double> y = g.pairings(gamma);
    double acc = 0.0;
    for (const Point& x : gamma.points())
        acc += g.eval_shifted(y, x, -1.0) * phi(x);
    return acc - g.generating(y) * phi_mean;
}

} // namespace pgfock
