#ifndef PGFOCK_CYLINDER_HPP
#define PGFOCK_CYLINDER_HPP

#include <span>
#include <vector>

#include "pgfock/configuration.hpp"
#include "pgfock/geometry.hpp"
#include "pgfock/test_function.hpp"

namespace pgfock {

/// Smooth cylinder function f(gamma) = F(<gamma, phi_1>, ..., <gamma, phi_N>),
/// with F from a closed family: multivariate polynomials, or a scaled
/// exponential of an affine form. The same object evaluates on
/// configurations (Poisson side) and on discrete measures (compound side),
/// where the pairings become <omega, phi_i>.
///
/// Derivative bounds of F over a box of pairing values are available for
/// the Lagrange-type estimates the jump integrals rely on.
class CylinderFunction {
public:
    struct PolyTerm {
        double coef;
        std::vector<int> exponents; // one per direction
    };

    static CylinderFunction polynomial(std::vector<TestFunction> directions,
                                       std::vector<PolyTerm> terms);
    /// amplitude * exp(c0 + sum_i linear_i * y_i)
    static CylinderFunction exp_affine(std::vector<TestFunction> directions, double amplitude,
                                       double c0, std::vector<double> linear);

    static CylinderFunction constant(double c) { return polynomial({}, {{c, {}}}); }
    /// h = <., psi>
    static CylinderFunction pairing_of(const TestFunction& psi) {
        return polynomial({psi}, {{1.0, {1}}});
    }

    size_t arity() const { return directions_.size(); }
    const std::vector<TestFunction>& directions() const { return directions_; }

    /// F at explicit pairing values.
    double generating(std::span<const double> y) const;

    std::vector<double> pairings(const Configuration& gamma) const;
    std::vector<double> pairings(const DiscreteMeasure& omega) const;

    double operator()(const Configuration& gamma) const;
    double operator()(const DiscreteMeasure& omega) const;

    /// Value after adding the atom s*epsilon_x: pairings shift by s*phi_i(x).
    /// `base` must be the pairings of the unshifted argument.
    double eval_shifted(std::span<const double> base, const Point& x, double s = 1.0) const;

    /// Bound C with |h(omega + s eps_x) - h(omega)| <= C s for pairings in
    /// `value_box` and |s| below the box margin: C = sum_i sup|dF/dy_i| * sup|phi_i|.
    double lagrange_constant(const std::vector<Interval>& value_box, const Window& w) const;

private:
    enum class Family { Polynomial, ExpAffine };

    CylinderFunction() = default;

    Family family_ = Family::Polynomial;
    std::vector<TestFunction> directions_;
    std::vector<PolyTerm> terms_;   // Polynomial
    double amplitude_ = 0.0;        // ExpAffine
    double c0_ = 0.0;
    std::vector<double> linear_;

    Interval partial_bound(size_t i, const std::vector<Interval>& box) const;
};

} // namespace pgfock

#endif
