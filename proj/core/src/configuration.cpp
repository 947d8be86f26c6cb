#include "pgfock/configuration.hpp"

#include <algorithm>

namespace pgfock {

namespace {

double ipow(double v, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= v;
    return r;
}

double eval_mark_poly(const std::vector<double>& p, double s) {
    double v = 0.0;
    for (size_t i = p.size(); i-- > 0;) v = v * s + p[i];
    return v;
}

} // namespace

Configuration Configuration::from_points(std::vector<Point> points) {
    std::sort(points.begin(), points.end());
    for (size_t i = 1; i < points.size(); ++i)
        if (points[i] == points[i - 1])
            throw AtomClash("Configuration: duplicate position");
    Configuration c;
    c.points_ = std::move(points);
    return c;
}

bool Configuration::contains(const Point& x) const {
    return std::binary_search(points_.begin(), points_.end(), x);
}

Configuration Configuration::add_atom(const Point& x) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), x);
    if (it != points_.end() && *it == x) throw AtomClash("add_atom: position already occupied");
    Configuration c;
    c.points_.reserve(points_.size() + 1);
    c.points_.insert(c.points_.end(), points_.begin(), it);
    c.points_.push_back(x);
    c.points_.insert(c.points_.end(), it, points_.end());
    return c;
}

Configuration Configuration::remove_atom(const Point& x) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), x);
    if (it == points_.end() || !(*it == x)) throw AtomMissing("remove_atom: no atom at position");
    return remove_index(static_cast<size_t>(it - points_.begin()));
}

Configuration Configuration::remove_index(size_t i) const {
    Configuration c;
    c.points_.reserve(points_.size() - 1);
    for (size_t j = 0; j < points_.size(); ++j)
        if (j != i) c.points_.push_back(points_[j]);
    return c;
}

MarkedConfiguration MarkedConfiguration::from_atoms(std::vector<Atom> atoms) {
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return a.pos < b.pos; });
    for (size_t i = 0; i < atoms.size(); ++i) {
        if (atoms[i].mark == 0.0) throw DomainError("MarkedConfiguration: marks must be nonzero");
        if (i > 0 && atoms[i].pos == atoms[i - 1].pos)
            throw AtomClash("MarkedConfiguration: duplicate position");
    }
    MarkedConfiguration m;
    m.atoms_ = std::move(atoms);
    return m;
}

Configuration MarkedConfiguration::positions() const {
    std::vector<Point> pts;
    pts.reserve(atoms_.size());
    for (const Atom& a : atoms_) pts.push_back(a.pos);
    return Configuration::from_points(std::move(pts));
}

DiscreteMeasure DiscreteMeasure::from_atoms(std::vector<Atom> atoms) {
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return a.pos < b.pos; });
    for (size_t i = 0; i < atoms.size(); ++i) {
        if (atoms[i].weight == 0.0) throw DomainError("DiscreteMeasure: weights must be nonzero");
        if (i > 0 && atoms[i].pos == atoms[i - 1].pos)
            throw AtomClash("DiscreteMeasure: duplicate position");
    }
    DiscreteMeasure m;
    m.atoms_ = std::move(atoms);
    return m;
}

bool DiscreteMeasure::contains(const Point& x) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), x,
                               [](const Atom& a, const Point& p) { return a.pos < p; });
    return it != atoms_.end() && it->pos == x;
}

DiscreteMeasure DiscreteMeasure::add_atom(const Point& x, double weight) const {
    if (weight == 0.0) throw DomainError("DiscreteMeasure::add_atom: weight must be nonzero");
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), x,
                               [](const Atom& a, const Point& p) { return a.pos < p; });
    if (it != atoms_.end() && it->pos == x)
        throw AtomClash("DiscreteMeasure::add_atom: position already occupied");
    DiscreteMeasure m;
    m.atoms_.reserve(atoms_.size() + 1);
    m.atoms_.insert(m.atoms_.end(), atoms_.begin(), it);
    m.atoms_.push_back({x, weight});
    m.atoms_.insert(m.atoms_.end(), it, atoms_.end());
    return m;
}

DiscreteMeasure DiscreteMeasure::remove_atom(const Point& x) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), x,
                               [](const Atom& a, const Point& p) { return a.pos < p; });
    if (it == atoms_.end() || !(it->pos == x))
        throw AtomMissing("DiscreteMeasure::remove_atom: no atom at position");
    return remove_index(static_cast<size_t>(it - atoms_.begin()));
}

DiscreteMeasure DiscreteMeasure::remove_index(size_t i) const {
    DiscreteMeasure m;
    m.atoms_.reserve(atoms_.size() - 1);
    for (size_t j = 0; j < atoms_.size(); ++j)
        if (j != i) m.atoms_.push_back(atoms_[j]);
    return m;
}

double pairing(const Configuration& gamma, const TestFunction& f) {
    double acc = 0.0;
    for (const Point& x : gamma.points()) acc += f(x);
    return acc;
}

double pairing(const DiscreteMeasure& omega, const TestFunction& f) {
    double acc = 0.0;
    for (const DiscreteMeasure::Atom& a : omega.atoms()) acc += a.weight * f(a.pos);
    return acc;
}

double pairing(const MarkedConfiguration& gh, const std::vector<double>& mark_poly,
               const TestFunction& f) {
    double acc = 0.0;
    for (const MarkedConfiguration::Atom& a : gh.atoms())
        acc += eval_mark_poly(mark_poly, a.mark) * f(a.pos);
    return acc;
}

double power_sum(const Configuration& gamma, const TestFunction& f, int k) {
    if (k < 1) throw DomainError("power_sum: k must be >= 1");
    double acc = 0.0;
    for (const Point& x : gamma.points()) acc += ipow(f(x), k);
    return acc;
}

double power_sum(const DiscreteMeasure& omega, const TestFunction& f, int k) {
    if (k < 1) throw DomainError("power_sum: k must be >= 1");
    double acc = 0.0;
    for (const DiscreteMeasure::Atom& a : omega.atoms()) acc += a.weight * ipow(f(a.pos), k);
    return acc;
}

size_t count_in_region(const Configuration& gamma, const Box& region) {
    size_t n = 0;
    for (const Point& x : gamma.points())
        if (region.contains(x)) ++n;
    return n;
}

DiscreteMeasure sigma_map(const MarkedConfiguration& gh) {
    std::vector<DiscreteMeasure::Atom> atoms;
    atoms.reserve(gh.size());
    for (const MarkedConfiguration::Atom& a : gh.atoms()) atoms.push_back({a.pos, a.mark});
    return DiscreteMeasure::from_atoms(std::move(atoms));
}

MarkedConfiguration sigma_inverse(const DiscreteMeasure& omega) {
    std::vector<MarkedConfiguration::Atom> atoms;
    atoms.reserve(omega.size());
    for (const DiscreteMeasure::Atom& a : omega.atoms()) atoms.push_back({a.weight, a.pos});
    return MarkedConfiguration::from_atoms(std::move(atoms));
}

} // namespace pgfock
