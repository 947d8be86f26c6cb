#ifndef PGFOCK_ERRORS_HPP
#define PGFOCK_ERRORS_HPP

#include <optional>
#include <stdexcept>
#include <string>

namespace pgfock {

/// Violated analytic precondition (range constraints, invalid constant terms, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Requested order/level exceeds a hard implementation cap.
class SizeError : public std::length_error {
public:
    explicit SizeError(const std::string& what) : std::length_error(what) {}
};

/// add_atom at a position that is already occupied.
class AtomClash : public std::invalid_argument {
public:
    explicit AtomClash(const std::string& what) : std::invalid_argument(what) {}
};

/// remove_atom at a position that carries no atom.
class AtomMissing : public std::invalid_argument {
public:
    explicit AtomMissing(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed experiment/measure configuration; carries source position.
class ConfigError : public std::runtime_error {
public:
    ConfigError(int line, int column, const std::string& what)
        : std::runtime_error("config:" + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + what),
          line(line), column(column) {}
    int line;
    int column;
};

/// Quantities that may be infinite (e.g. moments of an untruncated Gamma
/// Levy measure). Divergence is a normal outcome, not an exception:
/// std::nullopt means "diverges".
using MaybeDiverges = std::optional<double>;

} // namespace pgfock

#endif
