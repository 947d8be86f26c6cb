#include <doctest.h>

#include <cmath>

#include "pgfock/compound.hpp"
#include "pgfock/gamma.hpp"

using namespace pgfock;

namespace {
const IntensityMeasure& leb01() {
    static const IntensityMeasure sigma = IntensityMeasure::lebesgue(Window(0.0, 1.0));
    return sigma;
}

DiscreteMeasure as_unit_measure(const Configuration& gamma) {
    std::vector<DiscreteMeasure::Atom> atoms;
    for (const Point& p : gamma.points()) atoms.push_back({p, 1.0});
    return DiscreteMeasure::from_atoms(std::move(atoms));
}
} // namespace

TEST_CASE("u_sigma round trip evaluates identically") {
    const TestFunction psi = TestFunction::polynomial({0.2, 0.5});
    const CylinderFunction h = CylinderFunction::polynomial({psi}, {{1.0, {2}}, {-0.4, {1}}});
    const CompoundFn h_fn = [&](const DiscreteMeasure& w) { return h(w); };
    const CompoundFn round = u_sigma_inverse(u_sigma(h_fn));
    RngStream rng(3, 0);
    for (int i = 0; i < 100; ++i) {
        const DiscreteMeasure omega =
            sample_compound_poisson(LevyMeasure::telegraph(), leb01(), rng);
        CHECK(round(omega) == h_fn(omega));
    }
}

TEST_CASE("cylinder pairings agree along both evaluation paths") {
    // h(omega) = H(<omega, phi>) = H(<Sigma^{-1} omega, s phi>) bit for bit
    const TestFunction phi = TestFunction::polynomial({0.1, 0.7});
    RngStream rng(5, 1);
    for (int i = 0; i < 100; ++i) {
        const MarkedConfiguration gh =
            sample_marked_poisson(LevyMeasure::telegraph(), leb01(), rng);
        const DiscreteMeasure omega = sigma_map(gh);
        CHECK(pairing(omega, phi) == pairing(gh, {0.0, 1.0}, phi));
    }
}

TEST_CASE("mark mean of directions") {
    const MarkedDirection plain = MarkedDirection::plain(TestFunction::constant(1.0));
    CHECK(mark_mean(plain, LevyMeasure::poisson()).value() == 1.0);
    CHECK(mark_mean(plain, LevyMeasure::telegraph()).value() == 1.0);
    CHECK_FALSE(mark_mean(plain, LevyMeasure::gamma(1e-3)).has_value());

    const MarkedDirection linear{{0.0, 1.0}, TestFunction::constant(1.0)};
    CHECK(mark_mean(linear, LevyMeasure::telegraph()).value() == doctest::Approx(0.0));
    // truncated first moment integral_eps s e^{-s}/s = e^{-eps}
    CHECK(mark_mean(linear, LevyMeasure::gamma(1e-3)).value() ==
          doctest::Approx(std::exp(-1e-3)).epsilon(1e-12));
}

TEST_CASE("poisson reduction is bit identical") {
    const TestFunction phi = TestFunction::polynomial({0.3, 0.4});
    const TestFunction psi = TestFunction::polynomial({0.2, 0.5});
    const CylinderFunction h = CylinderFunction::polynomial({psi}, {{1.0, {2}}, {0.3, {1}}});
    const CylinderFunction g = CylinderFunction::exp_affine({psi}, 1.0, 0.0, {-0.7});
    const LevyMeasure unit = LevyMeasure::poisson();
    const MarkedDirection dir = MarkedDirection::plain(phi);
    RngStream rng(11, 0);
    for (int i = 0; i < 25; ++i) {
        const Configuration gamma = sample_poisson(leb01(), rng);
        const DiscreteMeasure omega = as_unit_measure(gamma);
        CHECK(cp_annihilation(h, dir, omega, unit, leb01()) ==
              directional_gradient(h, phi, gamma, leb01()));
        CHECK(cp_creation(g, dir, omega, unit, leb01()).value() ==
              creation_apply(g, phi, gamma, leb01()));
        for (int n = 0; n <= 4; ++n)
            CHECK(cp_charlier_eval(omega, dir, n, unit, leb01()).value() ==
                  charlier_eval(gamma, phi, n, leb01()));
    }
}

TEST_CASE("telegraph annihilation takes the two-sided difference form") {
    const TestFunction phi = TestFunction::polynomial({0.2, 0.3});
    const TestFunction psi = TestFunction::polynomial({0.4, -0.2});
    const CylinderFunction h = CylinderFunction::polynomial({psi}, {{1.0, {2}}});
    const LevyMeasure telegraph = LevyMeasure::telegraph();
    const MarkedDirection dir = MarkedDirection::plain(phi);
    RngStream rng(17, 0);
    const QuadratureRule rule = leb01().rule_for(phi);
    for (int i = 0; i < 10; ++i) {
        const DiscreteMeasure omega = sample_compound_poisson(telegraph, leb01(), rng);
        const double lhs = cp_annihilation(h, dir, omega, telegraph, leb01());
        double rhs = 0.0;
        for (const QuadNode& q : rule.nodes()) {
            const Point x = nudge_off_atoms(q.x, omega);
            rhs += q.w * leb01().density()(q.x) * phi(q.x) *
                   (0.5 * h(omega.add_atom(x, 1.0)) + 0.5 * h(omega.add_atom(x, -1.0)) -
                    h(omega));
        }
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("creation on the empty measure") {
    const TestFunction phi = TestFunction::polynomial({0.5, 0.1});
    const CylinderFunction one = CylinderFunction::constant(1.0);
    const LevyMeasure telegraph = LevyMeasure::telegraph();
    const double got =
        cp_creation(one, MarkedDirection::plain(phi), DiscreteMeasure(), telegraph, leb01())
            .value();
    CHECK(got == doctest::Approx(-telegraph.sampled_mass() * integrate(phi, leb01()))
                     .epsilon(1e-14));
}

TEST_CASE("creation reduces to the poisson charlier on constants") {
    const TestFunction phi = TestFunction::polynomial({0.3, 0.6});
    const CylinderFunction one = CylinderFunction::constant(1.0);
    RngStream rng(29, 2);
    const Configuration gamma = sample_poisson(leb01(), rng);
    const DiscreteMeasure omega = as_unit_measure(gamma);
    const double got =
        cp_creation(one, MarkedDirection::plain(phi), omega, LevyMeasure::poisson(), leb01())
            .value();
    CHECK(got == doctest::Approx(charlier_eval(gamma, phi, 1, leb01())).epsilon(1e-13));
}

TEST_CASE("diverging mass terms return the marker, not an exception") {
    const MarkedDirection constant_mark = MarkedDirection::plain(TestFunction::constant(0.4));
    const LevyMeasure gl = LevyMeasure::gamma(1e-3);
    const CylinderFunction one = CylinderFunction::constant(1.0);
    CHECK_FALSE(cp_creation(one, constant_mark, DiscreteMeasure(), gl, leb01()).has_value());
    CHECK_FALSE(cp_charlier_eval(DiscreteMeasure(), constant_mark, 2, gl, leb01()).has_value());

    const MarkedDirection vanishing{{0.0, 1.0}, TestFunction::constant(0.4)};
    CHECK(cp_creation(one, vanishing, DiscreteMeasure(), gl, leb01()).has_value());
}

TEST_CASE("lagrange bound holds on the cylinder family") {
    const TestFunction psi = TestFunction::polynomial({0.2, 0.5});
    const CylinderFunction h = CylinderFunction::polynomial({psi}, {{1.0, {2}}, {0.3, {1}}});
    RngStream rng(31, 0);
    const DiscreteMeasure omega = sample_compound_poisson(LevyMeasure::telegraph(), leb01(), rng);
    const std::vector<double> y = h.pairings(omega);
    // pairing box covering the sampled value and 1 unit of added jump mass
    std::vector<Interval> box{{y[0] - 1.0, y[0] + 1.0}};
    const double c = h.lagrange_constant(box, leb01().window());
    for (double xv : {0.1, 0.45, 0.8}) {
        const Point x = point1(xv);
        for (double s = 0.05; s <= 1.0; s += 0.05) {
            const double diff = std::fabs(h.eval_shifted(y, x, s) - h.generating(y));
            CHECK(diff <= c * s * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("gamma levy annihilation converges to the untruncated operator") {
    const TestFunction phi = TestFunction::polynomial({0.3, 0.2});
    const TestFunction psi = TestFunction::polynomial({0.1, 0.4});
    const CylinderFunction h = CylinderFunction::polynomial({psi}, {{1.0, {2}}, {-0.2, {1}}});
    RngStream rng(37, 0);
    const DiscreteMeasure omega =
        sample_compound_poisson(LevyMeasure::gamma(1e-2), leb01(), rng);
    const double untruncated = gamma_annihilation(h, phi, omega, leb01());
    for (double eps : {1e-1, 1e-2, 1e-3}) {
        const double truncated = cp_annihilation(h, MarkedDirection::plain(phi), omega,
                                                 LevyMeasure::gamma(eps), leb01());
        const double err = std::fabs(truncated - untruncated);
        // difference is the integral over (0, eps): bounded by C eps
        const std::vector<double> y = h.pairings(omega);
        std::vector<Interval> box{{y[0] - 1.0, y[0] + 1.0}};
        const double c = h.lagrange_constant(box, leb01().window()) *
                         integrate(phi, leb01());
        CHECK(err <= c * eps * 1.1 + 1e-12);
    }
}
