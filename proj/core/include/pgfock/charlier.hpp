#ifndef PGFOCK_CHARLIER_HPP
#define PGFOCK_CHARLIER_HPP

#include <functional>

#include "pgfock/cylinder.hpp"
#include "pgfock/measures.hpp"
#include "pgfock/report.hpp"
#include "pgfock/sampling.hpp"

namespace pgfock {

/// A real functional of configurations; cylinder functions, normalized
/// exponentials and iterated creation values all fit here.
using PoissonFn = std::function<double(const Configuration&)>;

/// Largest polynomial level served by the series engines.
inline constexpr int kMaxChaosLevel = 10;

/// Normalized (Poisson) exponential
///   exp(<gamma, log(1+phi)> - <phi>_sigma) = e^{-<phi>_sigma} prod_x (1+phi(x)),
/// evaluated in the exact product form. Requires inf phi > -1.
double normalized_exp_poisson(const TestFunction& phi, const Configuration& gamma,
                              const IntensityMeasure& sigma);
/// Same with <phi>_sigma precomputed once.
PoissonFn normalized_exp_fn(const TestFunction& phi, const IntensityMeasure& sigma);

/// Power sums S_k = <gamma, phi^k> and the mean m = <phi>_sigma feeding the
/// series expansion of the normalized exponential.
struct CharlierSymbols {
    std::vector<double> power_sums; // S_1..S_n
    double mean = 0.0;              // m
};
CharlierSymbols charlier_symbols(const Configuration& gamma, const TestFunction& phi, int n,
                                 const IntensityMeasure& sigma);

/// <C_n(gamma), phi^{(x)n}>: n! times the n-th Taylor coefficient of the
/// normalized exponential in t, via the truncated-series exponential of
///   L(t) = sum_k (-1)^{k+1} t^k S_k / k - t m.
/// n <= 10 (SizeError).
double charlier_eval(const Configuration& gamma, const TestFunction& phi, int n,
                     const IntensityMeasure& sigma);
/// All levels 0..n at once from precomputed symbols.
std::vector<double> charlier_eval_all(const CharlierSymbols& symbols, int n);

/// (grad f)(gamma; x) = f(gamma + eps_x) - f(gamma). AtomClash if x in gamma.
double poisson_gradient(const PoissonFn& f, const Configuration& gamma, const Point& x);

/// Directional form: integral (f(gamma+eps_x) - f(gamma)) phi(x) d sigma(x)
/// by quadrature; nodes that collide with atoms are moved by one ulp.
double directional_gradient(const PoissonFn& f, const TestFunction& phi,
                            const Configuration& gamma, const IntensityMeasure& sigma);

/// Creation operator (adjoint of the directional gradient):
///   sum_{x in gamma} g(gamma - eps_x) phi(x) - g(gamma) <phi>_sigma.
double creation_apply(const PoissonFn& g, const TestFunction& phi, const Configuration& gamma,
                      const IntensityMeasure& sigma);

/// n-fold creation iterate applied to 1, evaluated at gamma; memoized over
/// the removed-atom subsets. Equals <C_n(gamma), phi^{(x)n}>.
double creation_iterate(int n, const TestFunction& phi, const Configuration& gamma,
                        const IntensityMeasure& sigma);

/// Replays the quadrature point off the atom set (one-ulp shifts on the
/// first axis; the collision set has sigma measure zero).
Point nudge_off_atoms(Point x, const Configuration& gamma);

struct McOptions {
    std::uint64_t samples = 100000;
    std::uint64_t seed = 1;
    int threads = 0;                // 0 = hardware concurrency
    std::uint64_t stream_base = 0;  // estimator block offset
};

/// Mecke identity for integrands f(x, gamma) = phi(x) h(gamma): independent
/// MC estimates of E sum_{x in gamma} f(x, gamma) and of
/// E integral f(x, gamma + eps_x) d sigma(x); PASS within 3 combined s.e.
struct MeckeIntegrand {
    TestFunction phi;
    CylinderFunction h;
};
IdentityResult mecke_check(const MeckeIntegrand& f, const IntensityMeasure& sigma,
                           const McOptions& opt);

/// Radon-Nikodym transfer: E_{pi_sigma}[F e(eta;.)] vs E_{pi_sigma_eta}[F],
/// the second sampled under the perturbed intensity. Requires inf eta > -1.
IdentityResult rn_check(const TestFunction& eta, const CylinderFunction& F,
                        const IntensityMeasure& sigma, const McOptions& opt);

/// MC of E[<C_n, phi^n><C_m, psi^m>] against delta_{nm} n! (phi,psi)^n.
IdentityResult charlier_orthogonality_mc(const TestFunction& phi, const TestFunction& psi,
                                         int n, int m, const IntensityMeasure& sigma,
                                         const McOptions& opt);

} // namespace pgfock

#endif
