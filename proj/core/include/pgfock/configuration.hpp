#ifndef PGFOCK_CONFIGURATION_HPP
#define PGFOCK_CONFIGURATION_HPP

#include <vector>

#include "pgfock/errors.hpp"
#include "pgfock/test_function.hpp"

namespace pgfock {

/// Finite point configuration: strictly sorted (lexicographic) positions,
/// no duplicates. Immutable; atom surgery returns new values.
class Configuration {
public:
    Configuration() = default;
    /// Sorts and validates (throws AtomClash on duplicate positions).
    static Configuration from_points(std::vector<Point> points);

    size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const std::vector<Point>& points() const { return points_; }
    const Point& operator[](size_t i) const { return points_[i]; }

    bool contains(const Point& x) const;

    /// gamma + epsilon_x; throws AtomClash if x is already an atom.
    Configuration add_atom(const Point& x) const;
    /// gamma - epsilon_x; throws AtomMissing if x is not an atom.
    Configuration remove_atom(const Point& x) const;
    /// Remove by index (used by the creation-operator sums).
    Configuration remove_index(size_t i) const;

    bool operator==(const Configuration& o) const { return points_ == o.points_; }

private:
    std::vector<Point> points_;
};

/// Marked configuration: atoms (s_j, x_j) with nonzero marks and pairwise
/// distinct positions, sorted by position.
class MarkedConfiguration {
public:
    struct Atom {
        double mark; // s != 0
        Point pos;
        bool operator==(const Atom& o) const { return mark == o.mark && pos == o.pos; }
    };

    MarkedConfiguration() = default;
    static MarkedConfiguration from_atoms(std::vector<Atom> atoms);

    size_t size() const { return atoms_.size(); }
    bool empty() const { return atoms_.empty(); }
    const std::vector<Atom>& atoms() const { return atoms_; }

    /// Forgets marks; positions only.
    Configuration positions() const;

    bool operator==(const MarkedConfiguration& o) const { return atoms_ == o.atoms_; }

private:
    std::vector<Atom> atoms_;
};

/// Finite signed atomic measure omega = sum s_j epsilon_{x_j}: distinct
/// sorted positions, nonzero (possibly negative) weights.
class DiscreteMeasure {
public:
    struct Atom {
        Point pos;
        double weight; // s != 0
        bool operator==(const Atom& o) const { return pos == o.pos && weight == o.weight; }
    };

    DiscreteMeasure() = default;
    static DiscreteMeasure from_atoms(std::vector<Atom> atoms);

    size_t size() const { return atoms_.size(); }
    bool empty() const { return atoms_.empty(); }
    const std::vector<Atom>& atoms() const { return atoms_; }

    bool contains(const Point& x) const;

    /// omega + s epsilon_x; AtomClash if x is occupied.
    DiscreteMeasure add_atom(const Point& x, double weight) const;
    /// omega - s_x epsilon_x, removing the whole atom; AtomMissing if absent.
    DiscreteMeasure remove_atom(const Point& x) const;
    DiscreteMeasure remove_index(size_t i) const;

    bool operator==(const DiscreteMeasure& o) const { return atoms_ == o.atoms_; }

private:
    std::vector<Atom> atoms_;
};

/// <gamma, f> = sum_x f(x); exact atom sum, no quadrature.
double pairing(const Configuration& gamma, const TestFunction& f);
/// <omega, f> = sum_j s_j f(x_j).
double pairing(const DiscreteMeasure& omega, const TestFunction& f);
/// <gamma_hat, fhat> with fhat(s, x) = p(s) f(x); p given by coefficients.
double pairing(const MarkedConfiguration& gh, const std::vector<double>& mark_poly,
               const TestFunction& f);

/// <gamma, f^k> / <omega, f^k>; powers taken pointwise (exact).
double power_sum(const Configuration& gamma, const TestFunction& f, int k);
double power_sum(const DiscreteMeasure& omega, const TestFunction& f, int k);

/// |gamma intersect B| for a subbox B of the window.
size_t count_in_region(const Configuration& gamma, const Box& region);

/// Sigma transport: (s_j, x_j) |-> s_j epsilon_{x_j}, and its inverse.
/// Exact round trip in both directions.
DiscreteMeasure sigma_map(const MarkedConfiguration& gh);
MarkedConfiguration sigma_inverse(const DiscreteMeasure& omega);

} // namespace pgfock

#endif
