#ifndef PGFOCK_TEST_FUNCTION_HPP
#define PGFOCK_TEST_FUNCTION_HPP

#include <memory>
#include <vector>

#include "pgfock/geometry.hpp"

namespace pgfock {

/// Evaluable real test function on a window, drawn from a closed parametric
/// family: axis polynomials, box indicators and radial bumps, combined by
/// Sum / Product / Scale / Power. The family is closed under the pointwise
/// arithmetic the calculus needs, every member carries conservative range
/// bounds (interval arithmetic over the window) and announces the axis
/// positions where it is discontinuous or non-smooth, so quadrature rules
/// can split panels there.
///
/// Values are immutable; copies share the expression tree.
class TestFunction {
public:
    /// c0 + c1*x_axis + c2*x_axis^2 + ...
    static TestFunction polynomial(std::vector<double> coefficients, int axis = 0);
    static TestFunction constant(double c);
    /// height on the closed box, 0 outside.
    static TestFunction indicator(const Box& support, double height);
    /// amplitude * exp(1 - 1/(1 - r^2)), r = |x - center|/radius, for r < 1; 0 outside.
    static TestFunction bump(const Point& center, double radius, double amplitude);

    TestFunction operator+(const TestFunction& rhs) const;
    TestFunction operator-(const TestFunction& rhs) const;
    TestFunction operator*(const TestFunction& rhs) const;
    TestFunction scaled(double s) const;
    TestFunction pow(int k) const; // k >= 0

    double operator()(const Point& p) const;
    double operator()(double x) const { return (*this)(point1(x)); }

    /// Conservative [inf, sup] bounds of the values over the box.
    Interval range_on(const Box& box) const;
    Interval range_on(const Window& w) const { return range_on(w.box()); }

    /// Axis coordinates (interior to the box) where the function may be
    /// discontinuous or lose analyticity; quadrature splits panels here.
    std::vector<double> breakpoints(int axis, const Box& box) const;

    struct Node; // expression tree node (internal)

private:
    explicit TestFunction(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

inline TestFunction operator*(double s, const TestFunction& f) { return f.scaled(s); }

} // namespace pgfock

#endif
