#ifndef PGFOCK_SERIES_HPP
#define PGFOCK_SERIES_HPP

#include <cmath>
#include <type_traits>
#include <vector>

#include "pgfock/errors.hpp"
#include "pgfock/rational.hpp"

namespace pgfock {

/// Formal power series truncated at order N, coefficients c_0..c_N.
/// Scalar is double (fast mode) or Rational (exact mode). All operations
/// are closed at the truncation order; in exact mode the ring and inverse
/// laws hold exactly.
template <typename S>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : c_(static_cast<size_t>(order) + 1, S(0)) {
        if (order < 0) throw DomainError("TruncatedSeries: order must be >= 0");
    }
    TruncatedSeries(int order, std::vector<S> coeffs) : TruncatedSeries(order) {
        for (size_t i = 0; i < c_.size() && i < coeffs.size(); ++i) c_[i] = coeffs[i];
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const S& operator[](size_t k) const { return c_[k]; }
    S& operator[](size_t k) { return c_[k]; }
    const std::vector<S>& coeffs() const { return c_; }

private:
    std::vector<S> c_;
};

template <typename S>
TruncatedSeries<S> series_add(const TruncatedSeries<S>& f, const TruncatedSeries<S>& g) {
    TruncatedSeries<S> r(std::min(f.order(), g.order()));
    for (int k = 0; k <= r.order(); ++k)
        r[static_cast<size_t>(k)] = f[static_cast<size_t>(k)] + g[static_cast<size_t>(k)];
    return r;
}

template <typename S>
TruncatedSeries<S> series_scale(const TruncatedSeries<S>& f, const S& a) {
    TruncatedSeries<S> r(f.order());
    for (int k = 0; k <= r.order(); ++k) r[static_cast<size_t>(k)] = a * f[static_cast<size_t>(k)];
    return r;
}

/// Cauchy product truncated at the common order.
template <typename S>
TruncatedSeries<S> series_mul(const TruncatedSeries<S>& f, const TruncatedSeries<S>& g) {
    TruncatedSeries<S> r(std::min(f.order(), g.order()));
    for (int n = 0; n <= r.order(); ++n) {
        S acc(0);
        for (int k = 0; k <= n; ++k)
            acc += f[static_cast<size_t>(k)] * g[static_cast<size_t>(n - k)];
        r[static_cast<size_t>(n)] = acc;
    }
    return r;
}

/// g = exp(f): g_0 = e^{f_0}, g_n = (1/n) sum_{k=1..n} k f_k g_{n-k}.
/// Exact mode requires f_0 = 0 (so g_0 = 1 stays rational).
template <typename S>
TruncatedSeries<S> series_exp(const TruncatedSeries<S>& f) {
    TruncatedSeries<S> g(f.order());
    if constexpr (std::is_same_v<S, Rational>) {
        if (f[0] != Rational(0))
            throw DomainError("series_exp: rational mode requires zero constant term");
        g[0] = Rational(1);
    } else {
        g[0] = std::exp(f[0]);
    }
    for (int n = 1; n <= f.order(); ++n) {
        S acc(0);
        for (int k = 1; k <= n; ++k)
            acc += S(k) * f[static_cast<size_t>(k)] * g[static_cast<size_t>(n - k)];
        g[static_cast<size_t>(n)] = acc / S(n);
    }
    return g;
}

/// g = log(f): needs f_0 = 1 in exact mode, f_0 > 0 in float mode.
/// g_n = (n f_n - sum_{k=1..n-1} k g_k f_{n-k}) / (n f_0).
template <typename S>
TruncatedSeries<S> series_log(const TruncatedSeries<S>& f) {
    TruncatedSeries<S> g(f.order());
    if constexpr (std::is_same_v<S, Rational>) {
        if (f[0] != Rational(1))
            throw DomainError("series_log: rational mode requires unit constant term");
        g[0] = Rational(0);
    } else {
        if (!(f[0] > 0.0)) throw DomainError("series_log: constant term must be positive");
        g[0] = std::log(f[0]);
    }
    for (int n = 1; n <= f.order(); ++n) {
        S acc = S(n) * f[static_cast<size_t>(n)];
        for (int k = 1; k < n; ++k)
            acc -= S(k) * g[static_cast<size_t>(k)] * f[static_cast<size_t>(n - k)];
        g[static_cast<size_t>(n)] = acc / (S(n) * f[0]);
    }
    return g;
}

} // namespace pgfock

#endif
