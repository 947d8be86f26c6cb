#ifndef PGFOCK_SERIALIZE_HPP
#define PGFOCK_SERIALIZE_HPP

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "pgfock/configuration.hpp"

namespace pgfock {

/// Line-oriented text format for configurations and atomic measures.
/// Binary64 values are written as hexadecimal float literals, so a
/// write/read round trip reproduces every atom bit-exactly.
std::string to_text(const Configuration& c, int dim);
std::string to_text(const MarkedConfiguration& c, int dim);
std::string to_text(const DiscreteMeasure& m, int dim);

Configuration configuration_from_text(const std::string& text);
MarkedConfiguration marked_configuration_from_text(const std::string& text);
DiscreteMeasure discrete_measure_from_text(const std::string& text);

/// Atom arrays for the report JSON ([x, y] / [s, x, y] rows).
nlohmann::json to_json_atoms(const Configuration& c, int dim);
nlohmann::json to_json_atoms(const DiscreteMeasure& m, int dim);

/// Hexadecimal float literal helpers shared with the config writer.
std::string hex_double(double v);
double parse_double(const std::string& s); // accepts decimal and hex forms

} // namespace pgfock

#endif
