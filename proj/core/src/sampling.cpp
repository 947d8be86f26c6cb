#include "pgfock/sampling.hpp"

#include <boost/math/special_functions/expint.hpp>
#include <cmath>
#include <map>
#include <mutex>

namespace pgfock {

namespace {

/// Inverse-CDF table for the truncated Gamma Levy law e^{-s}/s 1_{s>=eps},
/// normalized: 1024 log-spaced jump nodes, monotone cubic (Fritsch-Carlson)
/// interpolation of s over the CDF values.
class GammaJumpTable {
public:
    explicit GammaJumpTable(double epsilon) {
        const int n = 1024;
        const double total = boost::math::expint(1, epsilon);
        // s_max: keep the unreachable tail mass around 1e-16 of the total
        double smax = 40.0;
        while (boost::math::expint(1, smax) > 1e-16 * total) smax *= 1.25;
        u_.resize(n);
        s_.resize(n);
        for (int i = 0; i < n; ++i) {
            const double s = epsilon * std::pow(smax / epsilon, i / (n - 1.0));
            s_[static_cast<size_t>(i)] = s;
            u_[static_cast<size_t>(i)] =
                (total - boost::math::expint(1, s)) / total; // P(jump <= s)
        }
        u_.front() = 0.0;
        u_.back() = 1.0;
        slopes_ = fritsch_carlson(u_, s_);
    }

    double invert(double u) const {
        auto it = std::upper_bound(u_.begin(), u_.end(), u);
        size_t i = it == u_.begin() ? 0 : static_cast<size_t>(it - u_.begin()) - 1;
        if (i + 1 >= u_.size()) i = u_.size() - 2;
        const double h = u_[i + 1] - u_[i];
        const double t = h > 0.0 ? (u - u_[i]) / h : 0.0;
        const double t2 = t * t, t3 = t2 * t;
        const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
        const double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
        return h00 * s_[i] + h10 * h * slopes_[i] + h01 * s_[i + 1] + h11 * h * slopes_[i + 1];
    }

private:
    static std::vector<double> fritsch_carlson(const std::vector<double>& x,
                                               const std::vector<double>& y) {
        const size_t n = x.size();
        std::vector<double> d(n - 1), m(n);
        for (size_t i = 0; i + 1 < n; ++i) d[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
        m[0] = d[0];
        m[n - 1] = d[n - 2];
        for (size_t i = 1; i + 1 < n; ++i)
            m[i] = (d[i - 1] * d[i] <= 0.0) ? 0.0 : 0.5 * (d[i - 1] + d[i]);
        for (size_t i = 0; i + 1 < n; ++i) {
            if (d[i] == 0.0) {
                m[i] = m[i + 1] = 0.0;
                continue;
            }
            const double a = m[i] / d[i], b = m[i + 1] / d[i];
            const double r = a * a + b * b;
            if (r > 9.0) {
                const double tau = 3.0 / std::sqrt(r);
                m[i] = tau * a * d[i];
                m[i + 1] = tau * b * d[i];
            }
        }
        return m;
    }

    std::vector<double> u_, s_, slopes_;
};

const GammaJumpTable& cached_gamma_table(double epsilon) {
    static std::map<double, GammaJumpTable> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(epsilon);
    if (it == cache.end()) it = cache.emplace(epsilon, GammaJumpTable(epsilon)).first;
    return it->second;
}

Point sample_position(const IntensityMeasure& sigma, RngStream& rng) {
    const Window& w = sigma.window();
    const double bound = sigma.density_sup_bound();
    for (;;) {
        Point p = point1(rng.uniform(w.axis(0).lo, w.axis(0).hi));
        if (w.dim() == 2) p[1] = rng.uniform(w.axis(1).lo, w.axis(1).hi);
        if (rng.uniform(0.0, bound) < sigma.density()(p)) return p;
    }
}

} // namespace

double sample_levy_jump(const LevyMeasure& rho, RngStream& rng) {
    if (rho.is_gamma()) return cached_gamma_table(rho.epsilon()).invert(rng.uniform());
    double u = rng.uniform(0.0, rho.sampled_mass());
    for (const LevyMeasure::Atom& a : rho.atoms()) {
        u -= a.weight;
        if (u <= 0.0) return a.jump;
    }
    return rho.atoms().back().jump;
}

Configuration sample_poisson(const IntensityMeasure& sigma, RngStream& rng) {
    const std::uint64_t n = rng.poisson(sigma.total_mass());
    std::vector<Point> pts;
    pts.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) pts.push_back(sample_position(sigma, rng));
    // duplicate positions occur with probability zero; regenerate on clash
    for (;;) {
        try {
            return Configuration::from_points(pts);
        } catch (const AtomClash&) {
            for (Point& p : pts) p = sample_position(sigma, rng);
        }
    }
}

MarkedConfiguration sample_marked_poisson(const LevyMeasure& rho, const IntensityMeasure& sigma,
                                          RngStream& rng) {
    const double mass = rho.sampled_mass() * sigma.total_mass();
    const std::uint64_t n = rng.poisson(mass);
    std::vector<MarkedConfiguration::Atom> atoms;
    atoms.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const double s = sample_levy_jump(rho, rng);
        atoms.push_back({s, sample_position(sigma, rng)});
    }
    for (;;) {
        try {
            return MarkedConfiguration::from_atoms(atoms);
        } catch (const AtomClash&) {
            for (auto& a : atoms) a.pos = sample_position(sigma, rng);
        }
    }
}

DiscreteMeasure sample_compound_poisson(const LevyMeasure& rho, const IntensityMeasure& sigma,
                                        RngStream& rng) {
    return sigma_map(sample_marked_poisson(rho, sigma, rng));
}

} // namespace pgfock
