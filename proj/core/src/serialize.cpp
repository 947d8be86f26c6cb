#include "pgfock/serialize.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

namespace pgfock {

std::string hex_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%a", v);
    return buf;
}

double parse_double(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str()) throw DomainError("parse_double: not a number: '" + s + "'");
    return v;
}

namespace {

struct Line {
    std::string kind;
    std::vector<std::string> fields;
};

std::vector<Line> split_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        Line l;
        ls >> l.kind;
        std::string tok;
        while (ls >> tok) l.fields.push_back(tok);
        out.push_back(std::move(l));
    }
    return out;
}

int parse_header(const std::vector<Line>& lines, const std::string& expected_kind) {
    if (lines.empty() || lines.front().kind != expected_kind || lines.front().fields.empty())
        throw DomainError("from_text: expected '" + expected_kind + " <dim>' header");
    return std::stoi(lines.front().fields[0]);
}

} // namespace

std::string to_text(const Configuration& c, int dim) {
    std::ostringstream out;
    out << "configuration " << dim << "\n";
    for (const Point& p : c.points()) {
        out << "atom " << hex_double(p[0]);
        if (dim == 2) out << ' ' << hex_double(p[1]);
        out << "\n";
    }
    return out.str();
}

std::string to_text(const MarkedConfiguration& c, int dim) {
    std::ostringstream out;
    out << "marked-configuration " << dim << "\n";
    for (const auto& a : c.atoms()) {
        out << "atom " << hex_double(a.mark) << ' ' << hex_double(a.pos[0]);
        if (dim == 2) out << ' ' << hex_double(a.pos[1]);
        out << "\n";
    }
    return out.str();
}

std::string to_text(const DiscreteMeasure& m, int dim) {
    std::ostringstream out;
    out << "discrete-measure " << dim << "\n";
    for (const auto& a : m.atoms()) {
        out << "atom " << hex_double(a.weight) << ' ' << hex_double(a.pos[0]);
        if (dim == 2) out << ' ' << hex_double(a.pos[1]);
        out << "\n";
    }
    return out.str();
}

Configuration configuration_from_text(const std::string& text) {
    const auto lines = split_lines(text);
    const int dim = parse_header(lines, "configuration");
    std::vector<Point> pts;
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto& f = lines[i].fields;
        if (lines[i].kind != "atom" || static_cast<int>(f.size()) != dim)
            throw DomainError("configuration_from_text: malformed atom line");
        pts.push_back(dim == 2 ? point2(parse_double(f[0]), parse_double(f[1]))
                               : point1(parse_double(f[0])));
    }
    return Configuration::from_points(std::move(pts));
}

MarkedConfiguration marked_configuration_from_text(const std::string& text) {
    const auto lines = split_lines(text);
    const int dim = parse_header(lines, "marked-configuration");
    std::vector<MarkedConfiguration::Atom> atoms;
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto& f = lines[i].fields;
        if (lines[i].kind != "atom" || static_cast<int>(f.size()) != dim + 1)
            throw DomainError("marked_configuration_from_text: malformed atom line");
        const Point pos = dim == 2 ? point2(parse_double(f[1]), parse_double(f[2]))
                                   : point1(parse_double(f[1]));
        atoms.push_back({parse_double(f[0]), pos});
    }
    return MarkedConfiguration::from_atoms(std::move(atoms));
}

DiscreteMeasure discrete_measure_from_text(const std::string& text) {
    const auto lines = split_lines(text);
    const int dim = parse_header(lines, "discrete-measure");
    std::vector<DiscreteMeasure::Atom> atoms;
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto& f = lines[i].fields;
        if (lines[i].kind != "atom" || static_cast<int>(f.size()) != dim + 1)
            throw DomainError("discrete_measure_from_text: malformed atom line");
        const Point pos = dim == 2 ? point2(parse_double(f[1]), parse_double(f[2]))
                                   : point1(parse_double(f[1]));
        atoms.push_back({pos, parse_double(f[0])});
    }
    return DiscreteMeasure::from_atoms(std::move(atoms));
}

nlohmann::json to_json_atoms(const Configuration& c, int dim) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Point& p : c.points()) {
        nlohmann::json row = nlohmann::json::array();
        row.push_back(p[0]);
        if (dim == 2) row.push_back(p[1]);
        arr.push_back(std::move(row));
    }
    return arr;
}

nlohmann::json to_json_atoms(const DiscreteMeasure& m, int dim) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& a : m.atoms()) {
        nlohmann::json row = nlohmann::json::array();
        row.push_back(a.weight);
        row.push_back(a.pos[0]);
        if (dim == 2) row.push_back(a.pos[1]);
        arr.push_back(std::move(row));
    }
    return arr;
}

} // namespace pgfock
