#include <doctest.h>

#include <cmath>

#include "pgfock/gamma.hpp"
#include "pgfock/mc.hpp"
#include "pgfock/sampling.hpp"

using namespace pgfock;

namespace {
const IntensityMeasure& leb01() {
    static const IntensityMeasure sigma = IntensityMeasure::lebesgue(Window(0.0, 1.0));
    return sigma;
}
} // namespace

TEST_CASE("normalized gamma exponential") {
    const DiscreteMeasure omega =
        DiscreteMeasure::from_atoms({{point1(0.3), 1.5}, {point1(0.7), 0.5}});
    CHECK(normalized_exp_gamma(TestFunction::constant(0.0), omega, leb01()) == 1.0);
    // empty omega: exp(-<log(1-phi)>)
    const TestFunction phi = TestFunction::constant(0.5);
    CHECK(normalized_exp_gamma(phi, DiscreteMeasure(), leb01()) ==
          doctest::Approx(std::exp(std::log(2.0))).epsilon(1e-13));
    CHECK_THROWS_AS(normalized_exp_gamma(TestFunction::constant(1.0), omega, leb01()),
                    DomainError);
}

TEST_CASE("laguerre levels 0 and 1") {
    const TestFunction phi = TestFunction::polynomial({0.1, 0.3});
    const DiscreteMeasure omega =
        DiscreteMeasure::from_atoms({{point1(0.2), 2.0}, {point1(0.8), -0.5}});
    CHECK(laguerre_eval(omega, phi, 0, leb01()) == 1.0);
    const double expected = integrate(phi, leb01()) - pairing(omega, phi);
    CHECK(laguerre_eval(omega, phi, 1, leb01()) == doctest::Approx(expected).epsilon(1e-13));
    CHECK_THROWS_AS(laguerre_eval(omega, phi, 11, leb01()), SizeError);
}

TEST_CASE("laguerre matches the finite-difference oracle in t") {
    const TestFunction phi = TestFunction::polynomial({0.2, 0.2});
    const DiscreteMeasure omega =
        DiscreteMeasure::from_atoms({{point1(0.4), 1.0}, {point1(0.6), 2.0}});
    auto gen = [&](double t) { return normalized_exp_gamma(phi.scaled(t), omega, leb01()); };
    const double h = 1e-4;
    const double d2 = (gen(h) - 2.0 * gen(0.0) + gen(-h)) / (h * h);
    CHECK(laguerre_eval(omega, phi, 2, leb01()) == doctest::Approx(d2).epsilon(1e-6));
}

TEST_CASE("laguerre partial sums reconstruct the exponential") {
    RngStream rng(3, 0);
    const DiscreteMeasure omega =
        sample_compound_poisson(LevyMeasure::gamma(1e-3), leb01(), rng);
    auto partial_sum = [&](const TestFunction& phi, double t, int levels) {
        const GammaSymbols sym = gamma_symbols(omega, phi, levels, leb01());
        const std::vector<double> lag = laguerre_eval_all(sym, levels);
        double acc = 0.0, tn = 1.0, factorial = 1.0;
        for (int n = 0; n <= levels; ++n) {
            if (n > 0) {
                tn *= t;
                factorial *= n;
            }
            acc += tn / factorial * lag[static_cast<size_t>(n)];
        }
        return acc;
    };
    SUBCASE("error below 1e-6 at N = 10 for ratio 1/4") {
        const TestFunction phi = TestFunction::constant(0.5);
        const double t = 0.5;
        const double direct = normalized_exp_gamma(phi.scaled(t), omega, leb01());
        CHECK(std::fabs(partial_sum(phi, t, 10) - direct) <
              1e-6 * std::max(1.0, std::fabs(direct)));
    }
    SUBCASE("geometric tail drives the error down at ratio 0.45") {
        const TestFunction phi = TestFunction::constant(0.9);
        const double t = 0.5;
        const double direct = normalized_exp_gamma(phi.scaled(t), omega, leb01());
        const double e6 = std::fabs(partial_sum(phi, t, 6) - direct);
        const double e10 = std::fabs(partial_sum(phi, t, 10) - direct);
        CHECK(e10 < e6);
        CHECK(e10 < 0.1 * std::max(1.0, std::fabs(direct)));
    }
}

TEST_CASE("inner product closed forms at low levels") {
    const TestFunction phi = TestFunction::polynomial({0.5, 1.0});
    const TestFunction psi = TestFunction::polynomial({1.0, -1.0 / 3.0});
    const double v1 = inner_l2(phi, psi, leb01());
    const double v2 = integrate((phi * psi).pow(2), leb01());

    CHECK(gamma_inner_factorized(phi, psi, 0, leb01()) == 1.0);
    CHECK(gamma_inner_factorized(phi, psi, 1, leb01()) == doctest::Approx(v1).epsilon(1e-13));
    CHECK(gamma_inner_factorized(phi, psi, 2, leb01()) ==
          doctest::Approx(v1 * v1 + v2).epsilon(1e-13));
    CHECK(gamma_inner_oracle(phi, psi, 2, leb01()) ==
          doctest::Approx(v1 * v1 + v2).epsilon(1e-13));
}

TEST_CASE("three-path equality, float and exact") {
    const TestFunction phi_f = TestFunction::polynomial({0.5, 1.0});
    const TestFunction psi_f = TestFunction::polynomial({1.0, -1.0 / 3.0});
    const RationalPoly phi_q({Rational(1, 2), Rational(1)});
    const RationalPoly psi_q({Rational(1), Rational(-1, 3)});
    const RationalMeasure sigma_q{Rational(0), Rational(1)};
    for (int n = 0; n <= 6; ++n) {
        const Rational a = gamma_inner_factorized_exact(phi_q, psi_q, n, sigma_q);
        const Rational b = gamma_inner_partition_exact(RationalRankKernel::power(phi_q, n),
                                                       RationalRankKernel::power(psi_q, n),
                                                       sigma_q);
        const Rational c = gamma_inner_oracle_exact(phi_q, psi_q, n, sigma_q);
        CHECK(a == b);
        CHECK(b == c);

        const double fa = gamma_inner_factorized(phi_f, psi_f, n, leb01());
        const double fb = gamma_inner_partition(RankKernel::power(phi_f, n),
                                                RankKernel::power(psi_f, n), leb01());
        const double fc = gamma_inner_oracle(phi_f, psi_f, n, leb01());
        const double exact = static_cast<double>(a);
        const double scale = std::max(1.0, std::fabs(exact));
        CHECK(std::fabs(fa - exact) <= 1e-11 * scale);
        CHECK(std::fabs(fb - exact) <= 1e-11 * scale);
        CHECK(std::fabs(fc - exact) <= 1e-11 * scale);
    }
}

TEST_CASE("partition route on general kernels") {
    SUBCASE("level 1 reduces to the plain pairing") {
        const TestFunction f1 = TestFunction::polynomial({0.0, 1.0});
        const TestFunction g1 = TestFunction::polynomial({0.3, 0.4});
        RankKernel f{1, {{2.0, {f1}}}};
        RankKernel g{1, {{1.0, {g1}}, {0.5, {f1}}}};
        const double expect =
            2.0 * (inner_l2(f1, g1, leb01()) + 0.5 * inner_l2(f1, f1, leb01()));
        CHECK(gamma_inner_partition(f, g, leb01()) == doctest::Approx(expect).epsilon(1e-13));
    }
    SUBCASE("level 2 symmetrized kernel against the hand expansion") {
        const TestFunction f1 = TestFunction::polynomial({0.0, 1.0});
        const TestFunction f2 = TestFunction::polynomial({1.0, -0.5});
        const RankKernel sym = RankKernel::symmetrized(1.0, {f1, f2});
        const double i11 = inner_l2(f1, f1, leb01());
        const double i22 = inner_l2(f2, f2, leb01());
        const double i12 = inner_l2(f1, f2, leb01());
        const double diag = integrate((f1 * f2).pow(2), leb01());
        const double expect = 0.5 * (i11 * i22 + i12 * i12) + diag;
        CHECK(gamma_inner_partition(sym, sym, leb01()) ==
              doctest::Approx(expect).epsilon(1e-12));
    }
    SUBCASE("level caps") {
        const TestFunction f = TestFunction::constant(1.0);
        CHECK_THROWS_AS(
            gamma_inner_partition(RankKernel::power(f, 9), RankKernel::power(f, 9), leb01()),
            SizeError);
    }
}

TEST_CASE("gamma inner dominates the standard Fock value") {
    const TestFunction phi = TestFunction::polynomial({0.4, 0.5});
    const double base = inner_l2(phi, phi, leb01());
    for (int n = 2; n <= 6; ++n) {
        const double quasi = gamma_inner_oracle(phi, phi, n, leb01());
        CHECK(quasi > std::pow(base, n) * (1.0 + 1e-9)); // strictly larger
    }
    // positivity on a random-ish kernel
    CHECK(gamma_inner_factorized(phi, phi, 5, leb01()) > 0.0);
}

TEST_CASE("gamma annihilation closed forms") {
    const TestFunction phi = TestFunction::polynomial({0.2, 0.4});
    const TestFunction psi = TestFunction::polynomial({0.5, -0.3});
    const DiscreteMeasure omega =
        DiscreteMeasure::from_atoms({{point1(0.25), 1.2}, {point1(0.75), 0.7}});
    SUBCASE("constants are annihilated") {
        CHECK(gamma_annihilation(CylinderFunction::constant(4.0), phi, omega, leb01()) ==
              doctest::Approx(0.0));
    }
    SUBCASE("linear pairing gives the L2 inner product (Gamma(1) = 1)") {
        const CylinderFunction h = CylinderFunction::pairing_of(psi);
        CHECK(gamma_annihilation(h, phi, omega, leb01()) ==
              doctest::Approx(inner_l2(psi, phi, leb01())).epsilon(1e-10));
    }
}

TEST_CASE("classical laguerre recurrence") {
    // L_2^{(0)}(x) = 1 - 2x + x^2/2
    for (double x : {0.0, 0.5, 1.7}) {
        CHECK(classical_laguerre(2, 0.0, x) ==
              doctest::Approx(1.0 - 2.0 * x + 0.5 * x * x).epsilon(1e-14));
        CHECK(classical_laguerre(0, 2.3, x) == 1.0);
        CHECK(classical_laguerre(1, 2.3, x) == doctest::Approx(3.3 - x));
    }
}

TEST_CASE("classical generating identity and the measured normalization") {
    const IntensityMeasure sigma = IntensityMeasure::lebesgue(Window(0.0, 2.0));
    const double T = 1.5, c = 0.4;
    RngStream rng(9, 0);
    const LevyMeasure rho = LevyMeasure::gamma(1e-3);
    for (int i = 0; i < 50; ++i) {
        const DiscreteMeasure omega = sample_compound_poisson(rho, sigma, rng);
        const ClassicalLaguerreSample s = laguerre_classical_check(T, c, omega, sigma, 6);
        CHECK(s.generating_lhs ==
              doctest::Approx(s.generating_rhs).epsilon(1e-12));
        double factorial = 1.0;
        for (int n = 0; n <= 6; ++n) {
            if (n > 0) factorial *= n;
            const double cl = s.classical_values[static_cast<size_t>(n)];
            if (std::fabs(cl) < 1e-6) continue;
            // the series convention carries n! against the classical one
            CHECK(s.laguerre_values[static_cast<size_t>(n)] / (factorial * cl) ==
                  doctest::Approx(1.0).epsilon(1e-9));
        }
    }
    CHECK_THROWS_AS(
        laguerre_classical_check(1.5, 1.2, DiscreteMeasure(), sigma, 3), DomainError);
    CHECK_THROWS_AS(laguerre_classical_check(3.0, 0.4, DiscreteMeasure(), sigma, 3),
                    DomainError);
}

TEST_CASE("classical orthogonality under the one-sided Gamma law") {
    const double T = 1.5, alpha = T - 1.0;
    const MeanSE offdiag = mc_estimate(30000, 12, 0, 0, [&](RngStream& rng) {
        std::gamma_distribution<double> gd(T, 1.0);
        const double x = gd(rng.engine());
        return classical_laguerre(1, alpha, x) * classical_laguerre(2, alpha, x);
    });
    CHECK(std::fabs(offdiag.mean) <= 3.0 * offdiag.se);
    const MeanSE diag = mc_estimate(30000, 12, kStreamBlock, 0, [&](RngStream& rng) {
        std::gamma_distribution<double> gd(T, 1.0);
        const double x = gd(rng.engine());
        const double v = classical_laguerre(2, alpha, x);
        return v * v;
    });
    // E[L_n^2] = Gamma(n + alpha + 1) / (n! Gamma(alpha + 1)) = (alpha+1)(alpha+2)/2
    const double expect = (alpha + 1.0) * (alpha + 2.0) / 2.0;
    CHECK(std::fabs(diag.mean - expect) <= 3.0 * diag.se);
}

TEST_CASE("laguerre orthogonality under truncated gamma noise") {
    McOptions opt;
    opt.samples = 20000;
    opt.seed = 19;
    const TestFunction phi = TestFunction::polynomial({0.0, 0.5});
    const TestFunction psi = TestFunction::polynomial({0.2, 0.3});
    SUBCASE("diagonal n = m = 1") {
        const IdentityResult r = gamma_orthogonality_mc(phi, psi, 1, 1, leb01(), 1e-3, opt);
        CHECK(r.pass);
        CHECK(r.rhs == doctest::Approx(inner_l2(phi, psi, leb01())));
    }
    SUBCASE("off-diagonal 0,2") {
        const IdentityResult r = gamma_orthogonality_mc(phi, psi, 0, 2, leb01(), 1e-3, opt);
        CHECK(r.rhs == 0.0);
        CHECK(r.pass);
    }
    SUBCASE("diagonal n = m = 2 equals 2! (v1^2 + v2)") {
        const IdentityResult r = gamma_orthogonality_mc(phi, psi, 2, 2, leb01(), 1e-3, opt);
        CHECK(r.pass);
        const double v1 = inner_l2(phi, psi, leb01());
        const double v2 = integrate((phi * psi).pow(2), leb01());
        CHECK(r.rhs == doctest::Approx(2.0 * (v1 * v1 + v2)).epsilon(1e-12));
    }
    SUBCASE("range guard") {
        CHECK_THROWS_AS(
            gamma_orthogonality_mc(TestFunction::constant(1.1), psi, 1, 1, leb01(), 1e-3, opt),
            DomainError);
    }
}

TEST_CASE("norm identity for truncated Laguerre expansions") {
    // F = sum_{n<=3} <L_n, c_n phi^{(x)n}>: E[F^2] = sum n! c_n^2 (phi^n, phi^n)_G
    McOptions opt;
    const TestFunction phi = TestFunction::polynomial({0.1, 0.5});
    const std::vector<double> coef{0.5, 1.0, -0.7, 0.3};
    const double eps = 1e-3;
    const LevyMeasure rho = LevyMeasure::gamma(eps);
    const GammaSymbols proto = gamma_symbols(DiscreteMeasure(), phi, 3, leb01());
    const MeanSE mc = mc_estimate(30000, 77, 0, 0, [&](RngStream& rng) {
        const DiscreteMeasure omega = sample_compound_poisson(rho, leb01(), rng);
        GammaSymbols sym = gamma_symbols(omega, phi, 3, leb01());
        sym.mean_powers = proto.mean_powers;
        const std::vector<double> lag = laguerre_eval_all(sym, 3);
        double f = 0.0;
        for (int n = 0; n <= 3; ++n) f += coef[static_cast<size_t>(n)] * lag[static_cast<size_t>(n)];
        return f * f;
    });
    double expect = 0.0, factorial = 1.0;
    for (int n = 0; n <= 3; ++n) {
        if (n > 0) factorial *= n;
        expect += factorial * coef[static_cast<size_t>(n)] * coef[static_cast<size_t>(n)] *
                  gamma_inner_factorized(phi, phi, n, leb01());
    }
    const double budget = 10.0 * eps * (1 + std::fabs(expect)) * 7;
    CHECK(std::fabs(mc.mean - expect) <= 3.0 * mc.se + budget);
}
