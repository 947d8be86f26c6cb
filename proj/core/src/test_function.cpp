#include "pgfock/test_function.hpp"

#include <cmath>

namespace pgfock {

struct TestFunction::Node {
    enum class Kind { Polynomial, Indicator, Bump, Sum, Product, Scale, Power };

    Kind kind;

    // Polynomial
    std::vector<double> coeffs;
    int axis = 0;
    // Indicator
    Box support{};
    double height = 0.0;
    // Bump
    Point center{};
    double radius = 0.0;
    double amplitude = 0.0;
    // composite
    std::shared_ptr<const Node> left, right;
    double scale = 1.0;
    int exponent = 1;

    double eval(const Point& p) const {
        switch (kind) {
        case Kind::Polynomial: {
            const double x = p[static_cast<size_t>(axis)];
            double v = 0.0;
            for (size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
            return v;
        }
        case Kind::Indicator:
            return support.contains(p) ? height : 0.0;
        case Kind::Bump: {
            double r2 = 0.0;
            for (int i = 0; i < support.dim; ++i) { // support.dim stores point dim here
                const double d = (p[static_cast<size_t>(i)] - center[static_cast<size_t>(i)]) / radius;
                r2 += d * d;
            }
            if (r2 >= 1.0) return 0.0;
            return amplitude * std::exp(1.0 - 1.0 / (1.0 - r2));
        }
        case Kind::Sum:
            return left->eval(p) + right->eval(p);
        case Kind::Product:
            return left->eval(p) * right->eval(p);
        case Kind::Scale:
            return scale * left->eval(p);
        case Kind::Power: {
            const double v = left->eval(p);
            double r = 1.0;
            for (int i = 0; i < exponent; ++i) r *= v;
            return r;
        }
        }
        return 0.0;
    }

    Interval range(const Box& box) const {
        switch (kind) {
        case Kind::Polynomial: {
            // interval Horner over the axis range
            Interval x = box.axis[static_cast<size_t>(axis)];
            Interval v{0.0, 0.0};
            for (size_t i = coeffs.size(); i-- > 0;) {
                v = v * x;
                v = v + Interval{coeffs[i], coeffs[i]};
            }
            return v;
        }
        case Kind::Indicator: {
            Interval r{std::min(height, 0.0), std::max(height, 0.0)};
            if (support.contains_box(box)) r = {height, height};
            return r;
        }
        case Kind::Bump:
            return {std::min(amplitude, 0.0), std::max(amplitude, 0.0)};
        case Kind::Sum:
            return left->range(box) + right->range(box);
        case Kind::Product:
            return left->range(box) * right->range(box);
        case Kind::Scale:
            return left->range(box).scaled(scale);
        case Kind::Power:
            return left->range(box).pow(exponent);
        }
        return {0.0, 0.0};
    }

    void collect_breakpoints(int ax, const Box& box, std::vector<double>& out) const {
        switch (kind) {
        case Kind::Polynomial:
            return;
        case Kind::Indicator: {
            const Interval& s = support.axis[static_cast<size_t>(ax)];
            const Interval& w = box.axis[static_cast<size_t>(ax)];
            if (s.lo > w.lo && s.lo < w.hi) out.push_back(s.lo);
            if (s.hi > w.lo && s.hi < w.hi) out.push_back(s.hi);
            return;
        }
        case Kind::Bump: {
            const Interval& w = box.axis[static_cast<size_t>(ax)];
            const double c = center[static_cast<size_t>(ax)];
            // axis-aligned extent of the support sphere
            if (c - radius > w.lo && c - radius < w.hi) out.push_back(c - radius);
            if (c + radius > w.lo && c + radius < w.hi) out.push_back(c + radius);
            return;
        }
        case Kind::Sum:
        case Kind::Product:
            left->collect_breakpoints(ax, box, out);
            right->collect_breakpoints(ax, box, out);
            return;
        case Kind::Scale:
        case Kind::Power:
            left->collect_breakpoints(ax, box, out);
            return;
        }
    }
};

using Node = TestFunction::Node;

namespace {
std::shared_ptr<const Node> make_node(Node n) {
    return std::make_shared<const Node>(std::move(n));
}
} // namespace

TestFunction TestFunction::polynomial(std::vector<double> coefficients, int axis) {
    if (axis < 0 || axis > 1) throw DomainError("TestFunction::polynomial: axis must be 0 or 1");
    if (coefficients.empty()) coefficients.push_back(0.0);
    Node n;
    n.kind = Node::Kind::Polynomial;
    n.coeffs = std::move(coefficients);
    n.axis = axis;
    return TestFunction(make_node(std::move(n)));
}

TestFunction TestFunction::constant(double c) { return polynomial({c}); }

TestFunction TestFunction::indicator(const Box& support, double height) {
    Node n;
    n.kind = Node::Kind::Indicator;
    n.support = support;
    n.height = height;
    return TestFunction(make_node(std::move(n)));
}

TestFunction TestFunction::bump(const Point& center, double radius, double amplitude) {
    if (!(radius > 0.0)) throw DomainError("TestFunction::bump: radius must be positive");
    Node n;
    n.kind = Node::Kind::Bump;
    n.center = center;
    n.radius = radius;
    n.amplitude = amplitude;
    n.support.dim = 2; // bump measures distance in all point coordinates
    return TestFunction(make_node(std::move(n)));
}

TestFunction TestFunction::operator+(const TestFunction& rhs) const {
    Node n;
    n.kind = Node::Kind::Sum;
    n.left = node_;
    n.right = rhs.node_;
    return TestFunction(make_node(std::move(n)));
}

TestFunction TestFunction::operator-(const TestFunction& rhs) const {
    return *this + rhs.scaled(-1.0);
}

TestFunction TestFunction::operator*(const TestFunction& rhs) const {
    Node n;
    n.kind = Node::Kind::Product;
    n.left = node_;
    n.right = rhs.node_;
    return TestFunction(make_node(std::move(n)));
}

TestFunction TestFunction::scaled(double s) const {
    Node n;
    n.kind = Node::Kind::Scale;
    n.left = node_;
    n.scale = s;
    return TestFunction(make_node(std::move(n)));
}

TestFunction TestFunction::pow(int k) const {
    if (k < 0) throw DomainError("TestFunction::pow: exponent must be >= 0");
    Node n;
    n.kind = Node::Kind::Power;
    n.left = node_;
    n.exponent = k;
    return TestFunction(make_node(std::move(n)));
}

double TestFunction::operator()(const Point& p) const { return node_->eval(p); }

Interval TestFunction::range_on(const Box& box) const { return node_->range(box); }

std::vector<double> TestFunction::breakpoints(int axis, const Box& box) const {
    std::vector<double> out;
    node_->collect_breakpoints(axis, box, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace pgfock
