#ifndef PGFOCK_SAMPLING_HPP
#define PGFOCK_SAMPLING_HPP

#include "pgfock/configuration.hpp"
#include "pgfock/measures.hpp"
#include "pgfock/rng.hpp"

namespace pgfock {

/// Poisson point process on the window: count ~ Poisson(sigma(W)),
/// positions i.i.d. with density proportional to sigma's density
/// (rejection against the interval-arithmetic envelope).
Configuration sample_poisson(const IntensityMeasure& sigma, RngStream& rng);

/// Marked Poisson sample with product intensity rho (x) sigma: base count
/// Poisson(rho_mass * sigma(W)), positions from sigma, marks i.i.d. from
/// rho (discrete table, or the truncated Gamma Levy inverse-CDF table).
MarkedConfiguration sample_marked_poisson(const LevyMeasure& rho, const IntensityMeasure& sigma,
                                          RngStream& rng);

/// Compound Poisson noise: sigma_map of a marked Poisson sample. For
/// GammaLevy this is the epsilon-truncated Gamma noise.
DiscreteMeasure sample_compound_poisson(const LevyMeasure& rho, const IntensityMeasure& sigma,
                                        RngStream& rng);

/// One jump drawn from rho / rho_mass (exposed for tests).
double sample_levy_jump(const LevyMeasure& rho, RngStream& rng);

} // namespace pgfock

#endif
