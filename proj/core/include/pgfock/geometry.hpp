#ifndef PGFOCK_GEOMETRY_HPP
#define PGFOCK_GEOMETRY_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

#include "pgfock/errors.hpp"

namespace pgfock {

/// A point in the window. Supports d in {1,2}; for d=1 the second
/// coordinate is fixed to zero so lexicographic std::array ordering is the
/// position order everywhere.
using Point = std::array<double, 2>;

inline Point point1(double x) { return {x, 0.0}; }
inline Point point2(double x, double y) { return {x, y}; }

/// Closed interval; used both as an axis range and as conservative value
/// bounds from interval arithmetic.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const { return hi - lo; }
    bool contains(double x) const { return x >= lo && x <= hi; }

    Interval operator+(const Interval& o) const { return {lo + o.lo, hi + o.hi}; }
    Interval operator*(const Interval& o) const {
        const double a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        return {std::min(std::min(a, b), std::min(c, d)),
                std::max(std::max(a, b), std::max(c, d))};
    }
    Interval scaled(double s) const {
        return s >= 0 ? Interval{s * lo, s * hi} : Interval{s * hi, s * lo};
    }
    Interval hull(const Interval& o) const {
        return {std::min(lo, o.lo), std::max(hi, o.hi)};
    }
    Interval pow(int k) const;

    /// sup |x| over the interval.
    double abs_sup() const { return std::max(std::fabs(lo), std::fabs(hi)); }
};

inline Interval Interval::pow(int k) const {
    if (k == 0) return {1.0, 1.0};
    Interval r = *this;
    for (int i = 1; i < k; ++i) r = r * *this;
    if (k % 2 == 0 && r.lo < 0.0) r.lo = 0.0; // even powers are nonnegative
    return r;
}

/// Axis-aligned closed box, up to two axes.
struct Box {
    int dim = 1;
    std::array<Interval, 2> axis{};

    static Box make1(double a, double b) { return {1, {Interval{a, b}, Interval{0, 0}}}; }
    static Box make2(double ax, double bx, double ay, double by) {
        return {2, {Interval{ax, bx}, Interval{ay, by}}};
    }

    bool contains(const Point& p) const {
        for (int i = 0; i < dim; ++i)
            if (!axis[i].contains(p[i])) return false;
        return true;
    }
    bool contains_box(const Box& b) const {
        if (b.dim != dim) return false;
        for (int i = 0; i < dim; ++i)
            if (b.axis[i].lo < axis[i].lo || b.axis[i].hi > axis[i].hi) return false;
        return true;
    }
    double volume() const {
        double v = 1.0;
        for (int i = 0; i < dim; ++i) v *= axis[i].length();
        return v;
    }
};

/// The bounded computational window: every measure, sampler and quadrature
/// rule in the library lives on one of these.
class Window {
public:
    Window(double a, double b) : box_(Box::make1(a, b)) { validate(); }
    Window(double ax, double bx, double ay, double by)
        : box_(Box::make2(ax, bx, ay, by)) { validate(); }
    explicit Window(const Box& b) : box_(b) { validate(); }

    int dim() const { return box_.dim; }
    const Box& box() const { return box_; }
    const Interval& axis(int i) const { return box_.axis[i]; }
    double volume() const { return box_.volume(); }
    bool contains(const Point& p) const { return box_.contains(p); }

    bool operator==(const Window& o) const {
        if (o.dim() != dim()) return false;
        for (int i = 0; i < dim(); ++i)
            if (o.axis(i).lo != axis(i).lo || o.axis(i).hi != axis(i).hi) return false;
        return true;
    }

private:
    void validate() const {
        if (box_.dim < 1 || box_.dim > 2)
            throw DomainError("Window: dimension must be 1 or 2");
        for (int i = 0; i < box_.dim; ++i)
            if (!(box_.axis[i].lo < box_.axis[i].hi) ||
                !std::isfinite(box_.axis[i].lo) || !std::isfinite(box_.axis[i].hi))
                throw DomainError("Window: axis bounds must be finite with a < b");
    }

    Box box_;
};

} // namespace pgfock

#endif
