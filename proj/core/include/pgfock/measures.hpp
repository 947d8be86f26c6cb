#ifndef PGFOCK_MEASURES_HPP
#define PGFOCK_MEASURES_HPP

#include <memory>
#include <vector>

#include "pgfock/errors.hpp"
#include "pgfock/quadrature.hpp"
#include "pgfock/test_function.hpp"

namespace pgfock {

/// Finite intensity measure on a window: d(sigma) = density(x) dx with a
/// strictly positive density from the test-function family. Positivity is
/// checked on the quadrature grid at construction; total mass is
/// precomputed. Immutable.
class IntensityMeasure {
public:
    IntensityMeasure(const Window& window, TestFunction density, int quadrature_order = 32);

    static IntensityMeasure lebesgue(const Window& window, int quadrature_order = 32) {
        return IntensityMeasure(window, TestFunction::constant(1.0), quadrature_order);
    }

    const Window& window() const { return window_; }
    const TestFunction& density() const { return density_; }
    double total_mass() const { return total_mass_; }
    int quadrature_order() const { return order_; }

    /// Base rule (split at the density's own breakpoints only).
    const QuadratureRule& rule() const { return *rule_; }
    /// Rule additionally split at the breakpoints of `f`.
    QuadratureRule rule_for(const TestFunction& f) const;

    /// Conservative upper bound of the density over the window (rejection envelope).
    double density_sup_bound() const { return density_bound_; }

private:
    Window window_;
    TestFunction density_;
    int order_;
    std::shared_ptr<const QuadratureRule> rule_;
    double total_mass_ = 0.0;
    double density_bound_ = 0.0;
};

/// integral of f d(sigma) over the window, by panel-split Gauss-Legendre
/// quadrature. Deterministic for a fixed rule.
double integrate(const TestFunction& f, const IntensityMeasure& sigma);

/// L2(sigma) inner product (f, g).
double inner_l2(const TestFunction& f, const TestFunction& g, const IntensityMeasure& sigma);

/// sigma_eta with density (1 + eta) relative to sigma. Requires inf eta > -1.
IntensityMeasure perturb_sigma(const IntensityMeasure& sigma, const TestFunction& eta);

/// Jump-size (Levy) measure rho on the real line. Either finitely many
/// weighted atoms (no atom at 0), or the Gamma Levy density e^{-s}/s on
/// (0, inf) truncated at epsilon; the truncated total mass is E_1(epsilon).
class LevyMeasure {
public:
    struct Atom {
        double jump;   // s != 0
        double weight; // > 0
    };

    static LevyMeasure discrete(std::vector<Atom> atoms);
    static LevyMeasure gamma(double epsilon);

    /// rho = delta_1 (unit atom at s = 1): compound noise degenerates to Poisson.
    static LevyMeasure poisson() { return discrete({{1.0, 1.0}}); }
    /// rho = (delta_{-1} + delta_{+1})/2.
    static LevyMeasure telegraph() { return discrete({{-1.0, 0.5}, {1.0, 0.5}}); }

    bool is_gamma() const { return is_gamma_; }
    double epsilon() const { return epsilon_; }
    const std::vector<Atom>& atoms() const { return atoms_; }

    /// Treats GammaLevy as the infinite-activity measure it truncates
    /// (moment 0 diverges, polynomial mark factors need p(0) = 0).
    bool is_infinite_activity() const { return is_gamma_; }

    /// Total mass of the measure as sampled: sum of weights, or E_1(epsilon).
    double sampled_mass() const { return sampled_mass_; }

    /// Total mass in untruncated semantics; Diverges (nullopt) for GammaLevy.
    MaybeDiverges total_mass() const;

private:
    LevyMeasure() = default;
    bool is_gamma_ = false;
    double epsilon_ = 0.0;
    std::vector<Atom> atoms_;
    double sampled_mass_ = 0.0;
};

enum class LaplaceKind { Poisson, Compound, Gamma };

/// Closed-form Laplace functional E[exp<.,phi>]:
///   Poisson:   exp( integral (e^phi - 1) d sigma )
///   Compound:  exp( integral psi_rho(phi(x)) d sigma ), rho as sampled
///              (GammaLevy enters with its truncation)
///   Gamma:     exp( -<log(1 - phi)>_sigma ), untruncated; needs sup phi < 1
double laplace(LaplaceKind kind, const TestFunction& phi, const IntensityMeasure& sigma,
               const LevyMeasure* rho = nullptr);

/// Kolmogorov characteristic psi_rho(u) = integral (e^{su} - 1) d rho(s).
/// Exact atom sum for discrete rho; for GammaLevy a panel quadrature over
/// [epsilon, s_max(u)] with tail below 1e-12, defined for u < 1 only.
double kolmogorov_characteristic(const LevyMeasure& rho, double u);

/// n-th absolute moment integral |s|^n d rho. n = 0 is the total mass
/// (Diverges for GammaLevy in untruncated semantics). For n >= 1 the
/// GammaLevy moments are reported untruncated: Gamma(n) = (n-1)!.
MaybeDiverges levy_moment(const LevyMeasure& rho, int n);

/// Signed moment integral s^n d rho (same conventions as levy_moment).
MaybeDiverges levy_moment_signed(const LevyMeasure& rho, int n);

/// Fit of the analyticity bound m_n < C^n n! over 1 <= n <= n_max.
struct AnalyticityReport {
    double constant;      // smallest C with m_n <= C^n n! on the range
    bool holds;           // all moments finite on the range
};
AnalyticityReport levy_analyticity(const LevyMeasure& rho, int n_max);

} // namespace pgfock

#endif
