#pragma once

#include "weakhopf/linalg.hpp"
#include "weakhopf/report.hpp"

#include <map>
#include <optional>
#include <string>

namespace weakhopf {

/**
 * A self-describing instance file:
 *
 *   {"field": "rational",
 *    "objects": {"H": 4, "A": 2},
 *    "generators": {"mu": {"dom": ["H", "H"], "cod": ["H"], "matrix": [["1", "0", ...], ...]}, ...},
 *    "roles": {"bialgebra": {"mu": "mu", ...}, "antipode": "S", ...}}
 *
 * Matrices are row-major with one row per codomain basis vector; scalars are strings.
 * Nested role objects are flattened to dotted keys ("bialgebra.mu").
 */
struct Presentation {
    FieldSpec field;
    std::map<std::string, std::size_t> objects;
    std::map<std::string, LinMap> generators;
    std::map<std::string, std::string> roles;

    bool has_role(const std::string& key) const { return roles.count(key) > 0; }
    /// Generator named by a role; throws ParseError if either is missing.
    const LinMap& role_map(const std::string& key) const;
    const LinMap& generator(const std::string& name) const;
};

/// Throws ParseError or ShapeError. A field override reinterprets every scalar.
Presentation parse_presentation(const std::string& text, const std::optional<FieldSpec>& field = std::nullopt);
Presentation load_presentation(const std::string& path, const std::optional<FieldSpec>& field = std::nullopt);
/// Deterministic text; generators and roles in key order.
std::string dump_presentation(const Presentation& p);

/// Adds a generator, registering its objects; throws ShapeError on a dimension clash.
void add_generator(Presentation& p, const std::string& name, const LinMap& m);

/// {"version", "input_sha256", "entries", "millis"}.
std::string dump_report(const VerdictReport& r, const std::string& version, const std::string& input_sha256,
                        long long millis);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace weakhopf
