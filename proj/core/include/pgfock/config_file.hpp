#ifndef PGFOCK_CONFIG_FILE_HPP
#define PGFOCK_CONFIG_FILE_HPP

#include <optional>
#include <string>
#include <vector>

#include "pgfock/errors.hpp"

namespace pgfock {

/// Plain-text key-value configuration:
///   key = token token ...     one entry per line
///   # comment                 blank lines and comments ignored
/// Values keep their raw token spelling, so serialize(parse(text)) followed
/// by parse is the identity (numbers may be written in decimal or C99
/// hexadecimal float form). ConfigError carries line/column.
struct ConfigEntry {
    std::string key;
    std::vector<std::string> tokens;
    int line = 0;
};

class ConfigMap {
public:
    std::vector<ConfigEntry> entries;

    const ConfigEntry* find(const std::string& key) const;
    bool has(const std::string& key) const { return find(key) != nullptr; }

    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
    int get_int(const std::string& key, int fallback) const;

    void set(const std::string& key, const std::vector<std::string>& tokens);
};

ConfigMap parse_config(const std::string& text);
std::string serialize_config(const ConfigMap& map);

} // namespace pgfock

#endif
