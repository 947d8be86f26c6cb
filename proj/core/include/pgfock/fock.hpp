#ifndef PGFOCK_FOCK_HPP
#define PGFOCK_FOCK_HPP

#include <map>
#include <vector>

#include "pgfock/measures.hpp"
#include "pgfock/test_function.hpp"

namespace pgfock {

/// Finite Fock vector: per level n a linear combination of factorized
/// kernels f_1 (x) ... (x) f_n (symmetrization is implicit, the inner
/// product uses the permanent formula). Level 0 terms have no factors.
///
/// Norm conventions. With Gram matrix G_ij = (f_i, g_j)_{L2(sigma)}:
///   level product   <f^(n), g^(n)>_n = perm(G) / n!   so |f^{(x)n}|_n = |f|^n,
///   full product    (v, w)           = sum_n n! <v_n, w_n>_n,
/// matching ||F||^2 = sum n! |f^(n)|^2. The operator bounds
///   ||a-(phi) f^(n)||_{n-1} <= sqrt(n) |phi| ||f^(n)||_n,
///   ||a+(phi) f^(n)||_{n+1} <= sqrt(n+1) |phi| ||f^(n)||_n
/// hold in the weighted level norms ||.||_n = sqrt(n! <., .>_n) used by
/// fock_level_norm.
class FockVector {
public:
    struct Term {
        double coef = 0.0;
        std::vector<TestFunction> factors;
    };

    FockVector() = default;

    static FockVector vacuum(double c = 1.0) {
        FockVector v;
        v.add_term(c, {});
        return v;
    }
    /// coef * f1 (x) ... (x) fn at level n.
    static FockVector product(double coef, std::vector<TestFunction> factors) {
        FockVector v;
        v.add_term(coef, std::move(factors));
        return v;
    }

    void add_term(double coef, std::vector<TestFunction> factors);
    FockVector operator+(const FockVector& o) const;

    int max_level() const { return levels_.empty() ? -1 : levels_.rbegin()->first; }
    const std::map<int, std::vector<Term>>& levels() const { return levels_; }

private:
    std::map<int, std::vector<Term>> levels_;
};

/// Hard cap on the level served by the permanent-based inner products.
inline constexpr int kMaxFockLevel = 10;

enum class FockOp { Annihilate, Create };

/// a-(phi): level n -> n-1 via sum_j (phi, f_j) (x)_{i != j} f_i;
/// a+(phi): level n -> n+1 via phi (x) f^(n). SizeError past level 10.
FockVector fock_apply(FockOp op, const TestFunction& phi, const FockVector& v,
                      const IntensityMeasure& sigma);

/// Full Fock inner product (v, w) = sum_n n! <v_n, w_n>_n; with the
/// permanent level form this is sum_n sum_terms c c' perm(Gram).
double fock_inner(const FockVector& v, const FockVector& w, const IntensityMeasure& sigma);

/// Weighted norm of one level: sqrt(n! <v_n, v_n>_n).
double fock_level_norm(const FockVector& v, int level, const IntensityMeasure& sigma);

/// Truncated coherent vector Exp psi = (psi^{(x)n} / n!)_{n <= max_level}.
FockVector coherent_vector(const TestFunction& psi, int max_level);

/// Permanent of a square matrix (row-major), O(2^n n) dynamic program.
double permanent(const std::vector<std::vector<double>>& m);

} // namespace pgfock

#endif
