#ifndef PGFOCK_QUADRATURE_HPP
#define PGFOCK_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "pgfock/geometry.hpp"

namespace pgfock {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
/// Exact for polynomials of degree <= 2n - 1.
struct GaussLegendre {
    explicit GaussLegendre(int n);
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Nodes and weights of the n-point Gauss-Laguerre rule:
/// integral_0^inf f(t) e^{-t} dt ~= sum_i w_i f(t_i).
struct GaussLaguerre {
    explicit GaussLaguerre(int n);
    std::vector<double> nodes;
    std::vector<double> weights;
};

struct QuadNode {
    Point x;
    double w;
};

/// Tensor-product Gauss-Legendre rule over a window, with per-axis panels
/// split at the supplied breakpoints (discontinuity lines of indicator and
/// bump test functions). `order` is the point count per axis per panel.
class QuadratureRule {
public:
    QuadratureRule(const Window& window, int order,
                   const std::vector<std::vector<double>>& axis_breakpoints = {});

    const std::vector<QuadNode>& nodes() const { return nodes_; }
    int order() const { return order_; }
    const Window& window() const { return window_; }

    template <typename F>
    double integrate(F&& f) const {
        double acc = 0.0;
        for (const QuadNode& q : nodes_) acc += q.w * f(q.x);
        return acc;
    }

private:
    Window window_;
    int order_;
    std::vector<QuadNode> nodes_;
};

/// Composite Gauss-Legendre integral of a smooth 1-D function, one
/// `order`-point panel per consecutive pair of knots (knots sorted).
double integrate_panels(const std::vector<double>& knots, int order,
                        const std::function<double(double)>& f);

} // namespace pgfock

#endif
