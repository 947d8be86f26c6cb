#ifndef PGFOCK_COMPOUND_HPP
#define PGFOCK_COMPOUND_HPP

#include <functional>

#include "pgfock/charlier.hpp"
#include "pgfock/cylinder.hpp"
#include "pgfock/measures.hpp"

namespace pgfock {

/// Direction on the marked space: phihat(s, x) = p(s) phi(x) with a
/// polynomial mark factor p(s) = sum p_k s^k. For infinite-activity rho
/// (GammaLevy) the creation/Charlier mass terms require p(0) = 0.
struct MarkedDirection {
    std::vector<double> mark_poly; // p_0, p_1, ...
    TestFunction spatial;

    static MarkedDirection plain(const TestFunction& phi) { return {{1.0}, phi}; }

    double mark(double s) const {
        double v = 0.0;
        for (size_t i = mark_poly.size(); i-- > 0;) v = v * s + mark_poly[i];
        return v;
    }
    bool mark_is_one() const { return mark_poly.size() == 1 && mark_poly[0] == 1.0; }
};

/// <p>_rho for the measure as sampled (truncated moments for GammaLevy);
/// Diverges when p_0 != 0 meets infinite activity.
MaybeDiverges mark_mean(const MarkedDirection& dir, const LevyMeasure& rho);

using MarkedFn = std::function<double(const MarkedConfiguration&)>;
using CompoundFn = std::function<double(const DiscreteMeasure&)>;

/// U_Sigma h = h o Sigma and its inverse; exact round trip.
MarkedFn u_sigma(const CompoundFn& h);
CompoundFn u_sigma_inverse(const MarkedFn& fhat);

/// Annihilation operator on compound Poisson space:
///   integral integral (h(omega + s eps_x) - h(omega)) p(s) phi(x) d rho(s) d sigma(x).
/// Exact rho-sum for discrete rho; for GammaLevy the s-integral runs over
/// the truncated support [eps, 1] (log-spaced panels) + [1, inf)
/// (Gauss-Laguerre); on the cylinder family the integrand stays bounded as
/// eps -> 0 by the Lagrange bound.
double cp_annihilation(const CylinderFunction& h, const MarkedDirection& dir,
                       const DiscreteMeasure& omega, const LevyMeasure& rho,
                       const IntensityMeasure& sigma);

/// Creation operator on compound Poisson space:
///   sum_{(x,s) in omega} g(omega - s eps_x) p(s) phi(x) - g(omega) <phihat>_sigmahat,
/// with <phihat>_sigmahat = <p>_rho <phi>_sigma. Returns the Diverges
/// marker when the mass term diverges (p_0 != 0 with infinite rho).
MaybeDiverges cp_creation(const CylinderFunction& g, const MarkedDirection& dir,
                          const DiscreteMeasure& omega, const LevyMeasure& rho,
                          const IntensityMeasure& sigma);

/// Transported Charlier polynomial <C_n^{sigmahat}(Sigma^{-1} omega), phihat^{(x)n}>:
/// the Charlier series engine driven by the marked power sums
/// Shat_k = sum_atoms (p(s) phi(x))^k and mhat = <p>_rho <phi>_sigma.
MaybeDiverges cp_charlier_eval(const DiscreteMeasure& omega, const MarkedDirection& dir, int n,
                               const LevyMeasure& rho, const IntensityMeasure& sigma);

/// Cylinder-function overloads of the Poisson-side operators sharing the
/// exact evaluation structure of the compound ones, so the rho = eps_1
/// reduction reproduces them bit for bit.
double directional_gradient(const CylinderFunction& f, const TestFunction& phi,
                            const Configuration& gamma, const IntensityMeasure& sigma);
double creation_apply(const CylinderFunction& g, const TestFunction& phi,
                      const Configuration& gamma, const IntensityMeasure& sigma);

/// Quadrature point moved off the support of omega (one-ulp shifts).
Point nudge_off_atoms(Point x, const DiscreteMeasure& omega);

} // namespace pgfock

#endif
