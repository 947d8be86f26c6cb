#ifndef PGFOCK_REPORT_HPP
#define PGFOCK_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace pgfock {

/// One verified identity: named estimates, their standard errors, the
/// deterministic (quadrature + truncation) budget, and the resulting
/// pass/fail. `lhs`, `rhs` and `tolerance` make the decision re-derivable:
/// pass == (|lhs - rhs| <= tolerance), tolerance = 3*se_combined + budget.
struct IdentityResult {
    std::string name;
    std::vector<std::pair<std::string, double>> estimates;
    std::vector<std::pair<std::string, double>> standard_errors;
    double lhs = 0.0;
    double rhs = 0.0;
    double tolerance = 0.0;
    double deterministic_budget = 0.0;
    bool pass = false;
};

/// Machine-readable result of one suite run. Serializes to JSON (schema 1)
/// and, for the comparison suites, to a CSV table.
struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    std::vector<std::pair<std::string, std::string>> inputs; // echo of the spec
    std::vector<IdentityResult> identities;
    std::vector<std::string> table_header;        // optional comparison table
    std::vector<std::vector<std::string>> table_rows;
    double wall_time_ms = 0.0;

    bool pass() const {
        for (const IdentityResult& r : identities)
            if (!r.pass) return false;
        return true;
    }

    std::string to_json_string() const;
    std::string to_csv_string() const;
};

/// Convenience check: |lhs - rhs| <= 3*se + budget.
IdentityResult make_identity(const std::string& name, double lhs, double rhs, double se,
                             double budget);

} // namespace pgfock

#endif
