#ifndef PGFOCK_SUITES_HPP
#define PGFOCK_SUITES_HPP

#include <optional>
#include <string>

#include "pgfock/config_file.hpp"
#include "pgfock/gamma.hpp"
#include "pgfock/measures.hpp"
#include "pgfock/report.hpp"

namespace pgfock {

/// One experiment: a suite name plus the measure, function and sampling
/// parameters it runs with. Fields not present in the configuration keep
/// suite defaults.
struct ExperimentSpec {
    std::string suite;
    std::uint64_t seed = 1;
    std::uint64_t samples = 100000;
    int threads = 0;
    std::string out;             // empty = stdout only
    std::string format = "json"; // json | csv

    Window window{0.0, 1.0};
    int quadrature_order = 32;
    TestFunction density = TestFunction::constant(1.0);
    std::string levy = "poisson"; // poisson | telegraph | gamma | discrete s w ...
    std::vector<double> levy_params;
    double epsilon = 1e-3;

    std::optional<TestFunction> phi, psi, eta;
    int n = 2;
    int m = 2;
    double interval_T = 1.5; // laguerre-classical horizon
    double charge_c = 0.4;   // laguerre-classical generating argument

    IntensityMeasure intensity() const {
        return IntensityMeasure(window, density, quadrature_order);
    }
    LevyMeasure levy_measure() const;
};

/// Names of the runnable suites.
const std::vector<std::string>& suite_names();

/// Parse an experiment from key-value text (see docs/config-format.md).
ExperimentSpec spec_from_config(const ConfigMap& map);

/// Function descriptor used in config files:
///   poly c0 c1 ... | indicator lo hi height | bump center radius amplitude
/// (2-D: indicator lox hix loy hiy height, bump cx cy radius amplitude).
TestFunction parse_function(const std::vector<std::string>& tokens, const Window& window,
                            int config_line);

/// Execute one suite; deterministic given the spec and seed.
Report run_suite(const ExperimentSpec& spec);

} // namespace pgfock

#endif
