#ifndef PGFOCK_RATIONAL_HPP
#define PGFOCK_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "pgfock/errors.hpp"

namespace pgfock {

/// Exact scalar for the rational computation mode.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Dense univariate polynomial with rational coefficients; the exact
/// integration backend for the rational-mode inner products.
class RationalPoly {
public:
    RationalPoly() : c_{0} {}
    explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.push_back(0);
    }

    static RationalPoly constant(const Rational& v) { return RationalPoly({v}); }

    const std::vector<Rational>& coeffs() const { return c_; }
    size_t degree() const { return c_.size() - 1; }

    Rational operator()(const Rational& x) const {
        Rational v = 0;
        for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
        return v;
    }

    RationalPoly operator+(const RationalPoly& o) const {
        std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return RationalPoly(std::move(r));
    }

    RationalPoly operator*(const RationalPoly& o) const {
        std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return RationalPoly(std::move(r));
    }

    RationalPoly pow(int k) const {
        RationalPoly r = constant(1);
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    /// Exact integral over [a, b].
    Rational integrate(const Rational& a, const Rational& b) const {
        Rational acc = 0, pa = a, pb = b;
        for (size_t i = 0; i < c_.size(); ++i) {
            acc += c_[i] * (pb - pa) / Rational(i + 1);
            pa *= a;
            pb *= b;
        }
        return acc;
    }

private:
    std::vector<Rational> c_;
};

} // namespace pgfock

#endif
