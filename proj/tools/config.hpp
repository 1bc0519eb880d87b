#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "greenradio/curve.hpp"
#include "greenradio/deployment.hpp"
#include "greenradio/numerics.hpp"
#include "greenradio/scheduling.hpp"

namespace greenradio::cli {

class SchemaError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Flat `key = value` file. '#' starts a comment, keys may repeat (repeats
/// are meaningful only for list-style keys such as `packet`).
struct Config {
    std::string origin;
    std::vector<std::pair<std::string, std::string>> entries;

    bool has(const std::string& key) const;
    const std::string& get(const std::string& key) const;  // throws SchemaError when absent
    std::vector<std::string> get_all(const std::string& key) const;

    // Unknown keys are rejected; `repeatable` keys may appear more than once.
    void check_schema(const std::set<std::string>& allowed,
                      const std::set<std::string>& repeatable = {}) const;
};

Config parse_config_text(const std::string& text, const std::string& origin);
Config parse_config_file(const std::string& path);

double config_number(const std::string& value, const std::string& key, const std::string& origin);

// 'min:max:count' with an optional ':log' or ':lin' suffix.
Range parse_range(const std::string& text);

// 'lo:hi'.
SearchBracket parse_bracket(const std::string& text, double tolerance);

// Resolves `name` against the filesystem, then against GR_CONFIG_DIR.
std::string resolve_config_path(const std::string& name);

DeploymentScenario scenario_from_config(const Config& cfg);
CostModel cost_from_config(const Config& cfg);
PacketBatch batch_from_config(const Config& cfg);

}  // namespace greenradio::cli
