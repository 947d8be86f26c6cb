#include <doctest.h>

#include <nlohmann/json.hpp>

#include "pgfock/report.hpp"
#include "pgfock/serialize.hpp"
#include "pgfock/suites.hpp"

using namespace pgfock;

TEST_CASE("config parse and lossless round trip") {
    const std::string text =
        "# experiment\n"
        "suite = gamma-inner-threepath\n"
        "seed = 42\n"
        "samples = 1000\n"
        "window = 0x0p+0 0x1p+0\n"
        "phi = poly 0.5 1\n"
        "n = 4\n";
    const ConfigMap map = parse_config(text);
    CHECK(map.get_string("suite", "") == "gamma-inner-threepath");
    CHECK(map.get_u64("seed", 0) == 42);
    CHECK(map.get_int("n", 0) == 4);
    REQUIRE(map.find("phi") != nullptr);
    CHECK(map.find("phi")->tokens.size() == 3);

    const std::string emitted = serialize_config(map);
    const ConfigMap back = parse_config(emitted);
    REQUIRE(back.entries.size() == map.entries.size());
    for (size_t i = 0; i < map.entries.size(); ++i) {
        CHECK(back.entries[i].key == map.entries[i].key);
        CHECK(back.entries[i].tokens == map.entries[i].tokens);
    }
    // a second serialize is byte-identical
    CHECK(serialize_config(back) == emitted);
}

TEST_CASE("hex floats round trip bit-exactly through the config format") {
    for (double v : {0.1, -1.0 / 3.0, 6.02e23, 1e-300}) {
        const std::string tok = hex_double(v);
        CHECK(parse_double(tok) == v);
    }
    CHECK(parse_double("1.5e-3") == 1.5e-3);
}

TEST_CASE("config errors carry position") {
    try {
        parse_config("suite == mecke\nbroken line\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line >= 1);
    }
    CHECK_THROWS_AS(parse_config("= value\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("key =\n"), ConfigError);
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(spec_from_config(parse_config("suite = nonsense\n")), ConfigError);
    CHECK_THROWS_AS(spec_from_config(parse_config("suite = mecke\nbogus_key = 1\n")),
                    ConfigError);
    CHECK_THROWS_AS(spec_from_config(parse_config("suite = mecke\nformat = yaml\n")),
                    ConfigError);
    CHECK_THROWS_AS(
        spec_from_config(parse_config("suite = mecke\nwindow = 0 1 2\n")), ConfigError);
    CHECK_THROWS_AS(
        spec_from_config(parse_config("suite = mecke\nphi = spline 1 2\n")), ConfigError);

    const ExperimentSpec spec = spec_from_config(parse_config(
        "suite = laguerre-orth\nwindow = 0 2\ndensity = poly 1\nlevy = gamma 1e-4\n"
        "phi = poly 0 0.25\nn = 3\nseed = 9\nsamples = 500\n"));
    CHECK(spec.suite == "laguerre-orth");
    CHECK(spec.window.axis(0).hi == 2.0);
    CHECK(spec.levy == "gamma");
    CHECK(spec.levy_measure().is_gamma());
    CHECK(spec.levy_measure().epsilon() == doctest::Approx(1e-4));
}

TEST_CASE("function descriptors") {
    const Window w(0.0, 1.0);
    const TestFunction p = parse_function({"poly", "1", "-2"}, w, 1);
    CHECK(p(0.5) == doctest::Approx(0.0));
    const TestFunction i = parse_function({"indicator", "0.2", "0.6", "2"}, w, 1);
    CHECK(i(0.4) == 2.0);
    const TestFunction b = parse_function({"bump", "0.5", "0.2", "1"}, w, 1);
    CHECK(b(0.5) == doctest::Approx(1.0));
    const TestFunction c = parse_function({"const", "0x1.8p+1"}, w, 1);
    CHECK(c(0.1) == 3.0);
}

TEST_CASE("reports are reproducible for a fixed spec, seed and build") {
    ExperimentSpec spec;
    spec.suite = "gamma-inner-threepath";
    spec.seed = 123;
    spec.samples = 100;
    spec.n = 3;
    Report a = run_suite(spec);
    Report b = run_suite(spec);
    a.wall_time_ms = 0.0; // timing is the one run-dependent field
    b.wall_time_ms = 0.0;
    CHECK(a.to_json_string() == b.to_json_string());
    CHECK(a.to_csv_string() == b.to_csv_string());
}

TEST_CASE("report JSON carries the audit fields") {
    ExperimentSpec spec;
    spec.suite = "gamma-inner-threepath";
    spec.n = 2;
    const Report rep = run_suite(spec);
    const nlohmann::json j = nlohmann::json::parse(rep.to_json_string());
    CHECK(j["schema"] == 1);
    CHECK(j["suite"] == "gamma-inner-threepath");
    REQUIRE(j.contains("identities"));
    for (const auto& id : j["identities"]) {
        REQUIRE(id.contains("lhs"));
        REQUIRE(id.contains("rhs"));
        REQUIRE(id.contains("tolerance"));
        REQUIRE(id.contains("pass"));
        // the decision is re-derivable from the recorded numbers
        const bool rederived = std::fabs(id["lhs"].get<double>() - id["rhs"].get<double>()) <=
                               id["tolerance"].get<double>();
        CHECK(rederived == id["pass"].get<bool>());
    }
    CHECK(j["pass"].is_boolean());
}

TEST_CASE("identity pass rule") {
    const IdentityResult ok = make_identity("x", 1.0, 1.05, 0.02, 0.0);
    CHECK(ok.pass);
    const IdentityResult bad = make_identity("x", 1.0, 1.5, 0.02, 0.0);
    CHECK_FALSE(bad.pass);
    const IdentityResult budget = make_identity("x", 1.0, 1.5, 0.0, 0.6);
    CHECK(budget.pass);
}
