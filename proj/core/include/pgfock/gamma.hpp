#ifndef PGFOCK_GAMMA_HPP
#define PGFOCK_GAMMA_HPP

#include "pgfock/compound.hpp"
#include "pgfock/partitions.hpp"
#include "pgfock/rational.hpp"
#include "pgfock/report.hpp"
#include "pgfock/series.hpp"

namespace pgfock {

/// Normalized exponential on Gamma space,
///   exp( <omega, phi/(phi-1)> - <log(1-phi)>_sigma ),
/// atom part exact, integral by quadrature. Requires sup|phi| < 1.
double normalized_exp_gamma(const TestFunction& phi, const DiscreteMeasure& omega,
                            const IntensityMeasure& sigma);

/// Weighted power sums T_k = <omega, phi^k> and the means u_k = <phi^k>_sigma
/// feeding the Laguerre series
///   G(t) = sum_k t^k ( <phi^k>_sigma / k - T_k ),   <L_n, phi^{(x)n}> = n! [t^n] e^G.
struct GammaSymbols {
    std::vector<double> weighted_power_sums; // T_1..T_n
    std::vector<double> mean_powers;         // <phi^1>.., <phi^n>_sigma
};
GammaSymbols gamma_symbols(const DiscreteMeasure& omega, const TestFunction& phi, int n,
                           const IntensityMeasure& sigma);
std::vector<double> laguerre_eval_all(const GammaSymbols& symbols, int n);
double laguerre_eval(const DiscreteMeasure& omega, const TestFunction& phi, int n,
                     const IntensityMeasure& sigma);

/// ---- the quasi-n-particle inner product, three routes ----------------
///
/// All three consume only power integrals v_k = integral (phi psi)^k d sigma
/// (or per-block integrals for general rank kernels), so each is available
/// in float and in exact rational mode.

/// Route 1 (type sum): sum over block-size multiplicities of
///   n! prod_k 1/(i_k! k^{i_k}) * prod_k v_k^{i_k},    n <= 10.
template <typename S>
S gamma_inner_factorized_from(const std::vector<S>& v, int n);

/// Route 3 (series oracle): n! [t^n] exp( sum_k t^k v_k / k ),   n <= 10.
template <typename S>
S gamma_inner_oracle_from(const std::vector<S>& v, int n);

/// Finite-rank kernel at level n: sum of coefficient * f_1 (x) .. (x) f_n.
/// Symmetrize explicitly when the product terms are not symmetric.
struct RankKernel {
    int level = 0;
    std::vector<std::pair<double, std::vector<TestFunction>>> terms;

    static RankKernel power(const TestFunction& phi, int n) {
        return {n, {{1.0, std::vector<TestFunction>(static_cast<size_t>(n), phi)}}};
    }
    /// (1/n!) sum over permutations of the factors; rank n! decomposition.
    static RankKernel symmetrized(double coef, const std::vector<TestFunction>& factors);
};

/// Route 2 (partition sum, Eq.-level formula): over all set partitions P,
///   prod_{B in P} (|B|-1)! * prod_{B in P} integral prod_{j in B} f_j g_j d sigma,
/// bilinear over rank terms; n <= 8 (Bell-number cost). Inputs are expected
/// symmetric (factorized powers, or explicitly symmetrized).
double gamma_inner_partition(const RankKernel& f, const RankKernel& g,
                             const IntensityMeasure& sigma);

/// Float wrappers of routes 1 and 3 for factorized directions.
double gamma_inner_factorized(const TestFunction& phi, const TestFunction& psi, int n,
                              const IntensityMeasure& sigma);
double gamma_inner_oracle(const TestFunction& phi, const TestFunction& psi, int n,
                          const IntensityMeasure& sigma);

/// ---- exact rational mode ---------------------------------------------

/// 1-D measure with rational polynomial density on a rational interval.
struct RationalMeasure {
    Rational lo, hi;
    RationalPoly density = RationalPoly::constant(1);
};
Rational integrate_exact(const RationalPoly& f, const RationalMeasure& sigma);

struct RationalRankKernel {
    int level = 0;
    std::vector<std::pair<Rational, std::vector<RationalPoly>>> terms;

    static RationalRankKernel power(const RationalPoly& phi, int n) {
        return {n, {{Rational(1), std::vector<RationalPoly>(static_cast<size_t>(n), phi)}}};
    }
};

Rational gamma_inner_factorized_exact(const RationalPoly& phi, const RationalPoly& psi, int n,
                                      const RationalMeasure& sigma);
Rational gamma_inner_oracle_exact(const RationalPoly& phi, const RationalPoly& psi, int n,
                                  const RationalMeasure& sigma);
Rational gamma_inner_partition_exact(const RationalRankKernel& f, const RationalRankKernel& g,
                                     const RationalMeasure& sigma);

/// ---- operators and cross-checks ---------------------------------------

/// Annihilation operator on Gamma space (untruncated Levy density):
///   integral_W integral_0^inf (h(omega + s eps_x) - h(omega)) e^{-s}/s ds phi(x) d sigma(x);
/// the s -> 0 singularity cancels against the difference quotient.
double gamma_annihilation(const CylinderFunction& h, const TestFunction& phi,
                          const DiscreteMeasure& omega, const IntensityMeasure& sigma);

/// Classical generalized Laguerre polynomial L_n^{(alpha)}(x) by the
/// three-term recurrence.
double classical_laguerre(int n, double alpha, double x);

/// Per-omega data of the classical-Laguerre cross-check with phi = c 1_{[0,T]}
/// on 1-D Lebesgue sigma: the closed generating identity
///   normalized_exp_gamma = (1-c)^{-T} exp(-x c/(1-c)),  x = <omega, 1_{[0,T]}>,
/// and the level-wise ratios <L_n, 1^{(x)n}> / L_n^{(T-1)}(x) whose measured
/// normalization kappa_n the report records.
struct ClassicalLaguerreSample {
    double generating_lhs = 0.0;
    double generating_rhs = 0.0;
    std::vector<double> laguerre_values;  // levels 0..nmax via the series engine
    std::vector<double> classical_values; // L_n^{(T-1)}(x)
};
ClassicalLaguerreSample laguerre_classical_check(double T, double c, const DiscreteMeasure& omega,
                                                 const IntensityMeasure& sigma, int nmax);

/// MC of E[<L_n, phi^n><L_m, psi^m>] under truncated Gamma noise against
/// delta_{nm} n! gamma_inner_factorized; tolerance 3 s.e. + an epsilon-
/// proportional truncation budget.
IdentityResult gamma_orthogonality_mc(const TestFunction& phi, const TestFunction& psi, int n,
                                      int m, const IntensityMeasure& sigma, double epsilon,
                                      const McOptions& opt);

} // namespace pgfock

#endif
