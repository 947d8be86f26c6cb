#include "pgfock/config_file.hpp"

#include <sstream>

#include "pgfock/serialize.hpp"

namespace pgfock {

const ConfigEntry* ConfigMap::find(const std::string& key) const {
    for (const ConfigEntry& e : entries)
        if (e.key == key) return &e;
    return nullptr;
}

std::string ConfigMap::get_string(const std::string& key, const std::string& fallback) const {
    const ConfigEntry* e = find(key);
    if (e == nullptr || e->tokens.empty()) return fallback;
    return e->tokens[0];
}

double ConfigMap::get_double(const std::string& key, double fallback) const {
    const ConfigEntry* e = find(key);
    if (e == nullptr || e->tokens.empty()) return fallback;
    try {
        return parse_double(e->tokens[0]);
    } catch (const DomainError&) {
        throw ConfigError(e->line, 1, "key '" + key + "' expects a number");
    }
}

std::uint64_t ConfigMap::get_u64(const std::string& key, std::uint64_t fallback) const {
    const ConfigEntry* e = find(key);
    if (e == nullptr || e->tokens.empty()) return fallback;
    try {
        return std::stoull(e->tokens[0]);
    } catch (const std::exception&) {
        throw ConfigError(e->line, 1, "key '" + key + "' expects an unsigned integer");
    }
}

int ConfigMap::get_int(const std::string& key, int fallback) const {
    const ConfigEntry* e = find(key);
    if (e == nullptr || e->tokens.empty()) return fallback;
    try {
        return std::stoi(e->tokens[0]);
    } catch (const std::exception&) {
        throw ConfigError(e->line, 1, "key '" + key + "' expects an integer");
    }
}

void ConfigMap::set(const std::string& key, const std::vector<std::string>& tokens) {
    for (ConfigEntry& e : entries) {
        if (e.key == key) {
            e.tokens = tokens;
            return;
        }
    }
    entries.push_back({key, tokens, 0});
}

ConfigMap parse_config(const std::string& text) {
    ConfigMap map;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(lineno, static_cast<int>(line.size()) + 1,
                              "expected 'key = value'");
        ConfigEntry entry;
        entry.line = lineno;
        {
            size_t kend = line.find_last_not_of(" \t", eq == 0 ? 0 : eq - 1);
            if (eq == 0 || kend == std::string::npos || kend < start)
                throw ConfigError(lineno, 1, "empty key");
            entry.key = line.substr(start, kend - start + 1);
        }
        std::istringstream vs(line.substr(eq + 1));
        std::string tok;
        while (vs >> tok) entry.tokens.push_back(tok);
        if (entry.tokens.empty())
            throw ConfigError(lineno, static_cast<int>(eq) + 2, "empty value");
        map.entries.push_back(std::move(entry));
    }
    return map;
}

std::string serialize_config(const ConfigMap& map) {
    std::ostringstream out;
    for (const ConfigEntry& e : map.entries) {
        out << e.key << " =";
        for (const std::string& t : e.tokens) out << ' ' << t;
        out << '\n';
    }
    return out.str();
}

} // namespace pgfock
