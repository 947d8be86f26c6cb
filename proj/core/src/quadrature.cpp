#include "pgfock/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace pgfock {

GaussLegendre::GaussLegendre(int n) {
    if (n < 1) throw DomainError("GaussLegendre: order must be >= 1");
    nodes.resize(static_cast<size_t>(n));
    weights.resize(static_cast<size_t>(n));
    // Newton iteration on P_n, Chebyshev initial guesses.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        nodes[static_cast<size_t>(i)] = -x;
        nodes[static_cast<size_t>(n - 1 - i)] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        weights[static_cast<size_t>(i)] = w;
        weights[static_cast<size_t>(n - 1 - i)] = w;
    }
}

GaussLaguerre::GaussLaguerre(int n) {
    if (n < 1) throw DomainError("GaussLaguerre: order must be >= 1");
    nodes.resize(static_cast<size_t>(n));
    weights.resize(static_cast<size_t>(n));
    double x = 0.0;
    for (int i = 0; i < n; ++i) {
        // standard initial guesses (Stroud & Secrest)
        if (i == 0)
            x = 3.0 / (1.0 + 2.4 * n);
        else if (i == 1)
            x += 15.0 / (1.0 + 2.5 * n);
        else
            x += ((1.0 + 2.55 * (i - 1)) / (1.9 * (i - 1))) * (x - nodes[static_cast<size_t>(i - 2)]);
        double pp = 0.0, p1 = 0.0;
        for (int it = 0; it < 200; ++it) {
            double p0 = 1.0;
            p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0 - x) * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (p0 - p1) / x;
            const double dx = p0 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-14 * std::max(1.0, x)) break;
        }
        nodes[static_cast<size_t>(i)] = x;
        // w_i = x_i / (n L_{n-1}(x_i))^2, using L_{n+1}(x_i) = -n L_{n-1}(x_i)/(n+1) at roots
        weights[static_cast<size_t>(i)] = x / (static_cast<double>(n) * n * p1 * p1);
    }
}

namespace {

const GaussLegendre& cached_gl(int order) {
    static std::map<int, GaussLegendre> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, GaussLegendre(order)).first;
    return it->second;
}

std::vector<double> axis_knots(const Interval& range, const std::vector<double>& breaks) {
    std::vector<double> knots;
    knots.push_back(range.lo);
    for (double b : breaks)
        if (b > range.lo && b < range.hi) knots.push_back(b);
    knots.push_back(range.hi);
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
    return knots;
}

void axis_nodes(const Interval& range, const std::vector<double>& breaks, int order,
                std::vector<double>& xs, std::vector<double>& ws) {
    const GaussLegendre& gl = cached_gl(order);
    const std::vector<double> knots = axis_knots(range, breaks);
    for (size_t p = 0; p + 1 < knots.size(); ++p) {
        const double a = knots[p], b = knots[p + 1];
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (int i = 0; i < order; ++i) {
            xs.push_back(mid + half * gl.nodes[static_cast<size_t>(i)]);
            ws.push_back(half * gl.weights[static_cast<size_t>(i)]);
        }
    }
}

} // namespace

QuadratureRule::QuadratureRule(const Window& window, int order,
                               const std::vector<std::vector<double>>& axis_breakpoints)
    : window_(window), order_(order) {
    if (order < 1) throw DomainError("QuadratureRule: order must be >= 1");
    std::vector<double> xs0, ws0, xs1, ws1;
    const std::vector<double> none;
    axis_nodes(window.axis(0), axis_breakpoints.empty() ? none : axis_breakpoints[0],
               order, xs0, ws0);
    if (window.dim() == 1) {
        nodes_.reserve(xs0.size());
        for (size_t i = 0; i < xs0.size(); ++i)
            nodes_.push_back({point1(xs0[i]), ws0[i]});
        return;
    }
    axis_nodes(window.axis(1),
               axis_breakpoints.size() > 1 ? axis_breakpoints[1] : none, order, xs1, ws1);
    nodes_.reserve(xs0.size() * xs1.size());
    for (size_t i = 0; i < xs0.size(); ++i)
        for (size_t j = 0; j < xs1.size(); ++j)
            nodes_.push_back({point2(xs0[i], xs1[j]), ws0[i] * ws1[j]});
}

double integrate_panels(const std::vector<double>& knots, int order,
                        const std::function<double(double)>& f) {
    const GaussLegendre& gl = cached_gl(order);
    double acc = 0.0;
    for (size_t p = 0; p + 1 < knots.size(); ++p) {
        const double a = knots[p], b = knots[p + 1];
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        double panel = 0.0;
        for (int i = 0; i < order; ++i)
            panel += gl.weights[static_cast<size_t>(i)] * f(mid + half * gl.nodes[static_cast<size_t>(i)]);
        acc += half * panel;
    }
    return acc;
}

} // namespace pgfock
