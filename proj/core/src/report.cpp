#include "pgfock/report.hpp"

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

namespace pgfock {

IdentityResult make_identity(const std::string& name, double lhs, double rhs, double se,
                             double budget) {
    IdentityResult r;
    r.name = name;
    r.lhs = lhs;
    r.rhs = rhs;
    r.deterministic_budget = budget;
    r.tolerance = 3.0 * se + budget;
    r.pass = std::fabs(lhs - rhs) <= r.tolerance;
    r.estimates = {{"lhs", lhs}, {"rhs", rhs}};
    r.standard_errors = {{"combined", se}};
    return r;
}

std::string Report::to_json_string() const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["suite"] = suite;
    j["seed"] = seed;
    j["samples"] = samples;
    nlohmann::ordered_json in = nlohmann::ordered_json::object();
    for (const auto& [k, v] : inputs) in[k] = v;
    j["inputs"] = std::move(in);
    nlohmann::ordered_json ids = nlohmann::ordered_json::array();
    for (const IdentityResult& r : identities) {
        nlohmann::ordered_json o;
        o["identity"] = r.name;
        nlohmann::ordered_json est = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.estimates) est[k] = v;
        o["estimates"] = std::move(est);
        nlohmann::ordered_json ses = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.standard_errors) ses[k] = v;
        o["standard_errors"] = std::move(ses);
        o["lhs"] = r.lhs;
        o["rhs"] = r.rhs;
        o["tolerance"] = r.tolerance;
        o["deterministic_budget"] = r.deterministic_budget;
        o["pass"] = r.pass;
        ids.push_back(std::move(o));
    }
    j["identities"] = std::move(ids);
    if (!table_header.empty()) {
        nlohmann::ordered_json tab;
        tab["header"] = table_header;
        tab["rows"] = table_rows;
        j["table"] = std::move(tab);
    }
    j["pass"] = pass();
    j["wall_time_ms"] = wall_time_ms;
    return j.dump(2) + "\n";
}

namespace {
std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}
} // namespace

std::string Report::to_csv_string() const {
    std::ostringstream out;
    if (!table_header.empty()) {
        for (size_t i = 0; i < table_header.size(); ++i)
            out << (i ? "," : "") << csv_escape(table_header[i]);
        out << "\n";
        for (const auto& row : table_rows) {
            for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
            out << "\n";
        }
        return out.str();
    }
    out << "identity,lhs,rhs,tolerance,deterministic_budget,pass\n";
    out.precision(17);
    for (const IdentityResult& r : identities)
        out << csv_escape(r.name) << ',' << r.lhs << ',' << r.rhs << ',' << r.tolerance << ','
            << r.deterministic_budget << ',' << (r.pass ? "true" : "false") << "\n";
    return out.str();
}

} // namespace pgfock
