#include "pgfock/fock.hpp"

#include <cmath>

namespace pgfock {

void FockVector::add_term(double coef, std::vector<TestFunction> factors) {
    const int level = static_cast<int>(factors.size());
    if (level > kMaxFockLevel) throw SizeError("FockVector: level exceeds 10");
    levels_[level].push_back({coef, std::move(factors)});
}

FockVector FockVector::operator+(const FockVector& o) const {
    FockVector v = *this;
    for (const auto& [level, terms] : o.levels_) {
        auto& dst = v.levels_[level];
        dst.insert(dst.end(), terms.begin(), terms.end());
    }
    return v;
}

FockVector fock_apply(FockOp op, const TestFunction& phi, const FockVector& v,
                      const IntensityMeasure& sigma) {
    FockVector out;
    for (const auto& [level, terms] : v.levels()) {
        for (const FockVector::Term& t : terms) {
            if (op == FockOp::Annihilate) {
                if (level == 0) continue; // a- annihilates the vacuum
                for (size_t j = 0; j < t.factors.size(); ++j) {
                    std::vector<TestFunction> rest;
                    rest.reserve(t.factors.size() - 1);
                    for (size_t i = 0; i < t.factors.size(); ++i)
                        if (i != j) rest.push_back(t.factors[i]);
                    out.add_term(t.coef * inner_l2(phi, t.factors[j], sigma), std::move(rest));
                }
            } else {
                std::vector<TestFunction> extended;
                extended.reserve(t.factors.size() + 1);
                extended.push_back(phi);
                extended.insert(extended.end(), t.factors.begin(), t.factors.end());
                out.add_term(t.coef, std::move(extended));
            }
        }
    }
    return out;
}

double permanent(const std::vector<std::vector<double>>& m) {
    const size_t n = m.size();
    if (n == 0) return 1.0;
    // dp over column subsets: dp[S] = perm of rows 0..|S|-1 on columns S
    const size_t full = (size_t{1} << n);
    std::vector<double> dp(full, 0.0);
    dp[0] = 1.0;
    for (size_t s = 1; s < full; ++s) {
        const size_t row = static_cast<size_t>(__builtin_popcountll(s)) - 1;
        double acc = 0.0;
        for (size_t j = 0; j < n; ++j) {
            const size_t bit = size_t{1} << j;
            if (s & bit) acc += m[row][j] * dp[s ^ bit];
        }
        dp[s] = acc;
    }
    return dp[full - 1];
}

namespace {

double term_pair_inner(const FockVector::Term& a, const FockVector::Term& b,
                       const IntensityMeasure& sigma) {
    const size_t n = a.factors.size();
    std::vector<std::vector<double>> gram(n, std::vector<double>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            gram[i][j] = inner_l2(a.factors[i], b.factors[j], sigma);
    return a.coef * b.coef * permanent(gram);
}

} // namespace

double fock_inner(const FockVector& v, const FockVector& w, const IntensityMeasure& sigma) {
    double acc = 0.0;
    for (const auto& [level, vterms] : v.levels()) {
        const auto it = w.levels().find(level);
        if (it == w.levels().end()) continue;
        for (const auto& a : vterms)
            for (const auto& b : it->second) acc += term_pair_inner(a, b, sigma);
    }
    return acc;
}

double fock_level_norm(const FockVector& v, int level, const IntensityMeasure& sigma) {
    const auto it = v.levels().find(level);
    if (it == v.levels().end()) return 0.0;
    double acc = 0.0;
    for (const auto& a : it->second)
        for (const auto& b : it->second) acc += term_pair_inner(a, b, sigma);
    return std::sqrt(std::max(acc, 0.0));
}

FockVector coherent_vector(const TestFunction& psi, int max_level) {
    if (max_level > kMaxFockLevel) throw SizeError("coherent_vector: level exceeds 10");
    FockVector v;
    double inv_factorial = 1.0;
    for (int n = 0; n <= max_level; ++n) {
        if (n > 0) inv_factorial /= n;
        v.add_term(inv_factorial, std::vector<TestFunction>(static_cast<size_t>(n), psi));
    }
    return v;
}

} // namespace pgfock
