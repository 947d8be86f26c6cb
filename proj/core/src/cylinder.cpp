#include "pgfock/cylinder.hpp"

#include <cmath>

namespace pgfock {

CylinderFunction CylinderFunction::polynomial(std::vector<TestFunction> directions,
                                              std::vector<PolyTerm> terms) {
    for (const PolyTerm& t : terms)
        if (t.exponents.size() != directions.size())
            throw DomainError("CylinderFunction: term arity mismatch");
    CylinderFunction f;
    f.family_ = Family::Polynomial;
    f.directions_ = std::move(directions);
    f.terms_ = std::move(terms);
    return f;
}

CylinderFunction CylinderFunction::exp_affine(std::vector<TestFunction> directions,
                                              double amplitude, double c0,
                                              std::vector<double> linear) {
    if (linear.size() != directions.size())
        throw DomainError("CylinderFunction: linear coefficient arity mismatch");
    CylinderFunction f;
    f.family_ = Family::ExpAffine;
    f.directions_ = std::move(directions);
    f.amplitude_ = amplitude;
    f.c0_ = c0;
    f.linear_ = std::move(linear);
    return f;
}

double CylinderFunction::generating(std::span<const double> y) const {
    if (family_ == Family::Polynomial) {
        double acc = 0.0;
        for (const PolyTerm& t : terms_) {
            double v = t.coef;
            for (size_t i = 0; i < y.size(); ++i)
                for (int e = 0; e < t.exponents[i]; ++e) v *= y[i];
            acc += v;
        }
        return acc;
    }
    double arg = c0_;
    for (size_t i = 0; i < y.size(); ++i) arg += linear_[i] * y[i];
    return amplitude_ * std::exp(arg);
}

std::vector<double> CylinderFunction::pairings(const Configuration& gamma) const {
    std::vector<double> y(directions_.size());
    for (size_t i = 0; i < directions_.size(); ++i) y[i] = pairing(gamma, directions_[i]);
    return y;
}

std::vector<double> CylinderFunction::pairings(const DiscreteMeasure& omega) const {
    std::vector<double> y(directions_.size());
    for (size_t i = 0; i < directions_.size(); ++i) y[i] = pairing(omega, directions_[i]);
    return y;
}

double CylinderFunction::operator()(const Configuration& gamma) const {
    const std::vector<double> y = pairings(gamma);
    return generating(y);
}

double CylinderFunction::operator()(const DiscreteMeasure& omega) const {
    const std::vector<double> y = pairings(omega);
    return generating(y);
}

double CylinderFunction::eval_shifted(std::span<const double> base, const Point& x,
                                      double s) const {
    std::vector<double> y(base.begin(), base.end());
    for (size_t i = 0; i < directions_.size(); ++i) y[i] += s * directions_[i](x);
    return generating(y);
}

Interval CylinderFunction::partial_bound(size_t i, const std::vector<Interval>& box) const {
    if (family_ == Family::Polynomial) {
        Interval acc{0.0, 0.0};
        for (const PolyTerm& t : terms_) {
            const int e = t.exponents[i];
            if (e == 0) continue;
            Interval v{t.coef * e, t.coef * e};
            for (size_t j = 0; j < directions_.size(); ++j) {
                const int ej = t.exponents[j] - (j == i ? 1 : 0);
                v = v * box[j].pow(ej);
            }
            acc = acc + v;
        }
        return acc;
    }
    Interval arg{c0_, c0_};
    for (size_t j = 0; j < directions_.size(); ++j) arg = arg + box[j].scaled(linear_[j]);
    const double sup_exp = std::exp(arg.hi);
    const double mag = std::fabs(amplitude_ * linear_[i]) * sup_exp;
    return {-mag, mag};
}

double CylinderFunction::lagrange_constant(const std::vector<Interval>& value_box,
                                           const Window& w) const {
    if (value_box.size() != directions_.size())
        throw DomainError("lagrange_constant: box arity mismatch");
    double c = 0.0;
    for (size_t i = 0; i < directions_.size(); ++i)
        c += partial_bound(i, value_box).abs_sup() * directions_[i].range_on(w).abs_sup();
    return c;
}

} // namespace pgfock
