#include "config.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "csv.hpp"

namespace greenradio::cli {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

bool Config::has(const std::string& key) const {
    for (const auto& [k, v] : entries) {
        if (k == key) {
            return true;
        }
    }
    return false;
}

const std::string& Config::get(const std::string& key) const {
    const std::string* found = nullptr;
    for (const auto& [k, v] : entries) {
        if (k == key) {
            if (found != nullptr) {
                throw SchemaError(origin + ": key '" + key + "' given more than once");
            }
            found = &v;
        }
    }
    if (found == nullptr) {
        throw SchemaError(origin + ": missing required key '" + key + "'");
    }
    return *found;
}

std::vector<std::string> Config::get_all(const std::string& key) const {
    std::vector<std::string> values;
    for (const auto& [k, v] : entries) {
        if (k == key) {
            values.push_back(v);
        }
    }
    return values;
}

void Config::check_schema(const std::set<std::string>& allowed,
                          const std::set<std::string>& repeatable) const {
    std::set<std::string> seen;
    for (const auto& [k, v] : entries) {
        if (!allowed.count(k)) {
            throw SchemaError(origin + ": unknown key '" + k + "'");
        }
        if (seen.count(k) && !repeatable.count(k)) {
            throw SchemaError(origin + ": key '" + k + "' given more than once");
        }
        seen.insert(k);
    }
}

Config parse_config_text(const std::string& text, const std::string& origin) {
    Config cfg;
    cfg.origin = origin;
    std::istringstream in(text);
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw SchemaError(origin + ":" + std::to_string(line_no) +
                              ": expected 'key = value', got '" + line + "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw SchemaError(origin + ":" + std::to_string(line_no) + ": empty key or value");
        }
        cfg.entries.emplace_back(key, value);
    }
    return cfg;
}

Config parse_config_file(const std::string& path) {
    return parse_config_text(read_text_file(path), path);
}

double config_number(const std::string& value, const std::string& key, const std::string& origin) {
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0') {
        throw SchemaError(origin + ": value of '" + key + "' is not a number: '" + value + "'");
    }
    return v;
}

Range parse_range(const std::string& text) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, ':')) {
        parts.push_back(part);
    }
    if (parts.size() < 3 || parts.size() > 4) {
        throw SchemaError("range must be 'min:max:count' with optional ':log' or ':lin', got '" +
                          text + "'");
    }
    Range range;
    range.min = config_number(parts[0], "range min", text);
    range.max = config_number(parts[1], "range max", text);
    const double count = config_number(parts[2], "range count", text);
    if (count < 1 || count != std::floor(count)) {
        throw SchemaError("range count must be a positive integer, got '" + parts[2] + "'");
    }
    range.count = static_cast<long>(count);
    if (parts.size() == 4) {
        if (parts[3] == "log") {
            range.spacing = Spacing::logarithmic;
        } else if (parts[3] == "lin" || parts[3] == "linear") {
            range.spacing = Spacing::linear;
        } else {
            throw SchemaError("range spacing must be 'log' or 'lin', got '" + parts[3] + "'");
        }
    }
    return range;
}

SearchBracket parse_bracket(const std::string& text, double tolerance) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, ':')) {
        parts.push_back(part);
    }
    if (parts.size() != 2) {
        throw SchemaError("bracket must be 'lo:hi', got '" + text + "'");
    }
    return SearchBracket{config_number(parts[0], "bracket lo", text),
                         config_number(parts[1], "bracket hi", text), tolerance};
}

std::string resolve_config_path(const std::string& name) {
    namespace fs = std::filesystem;
    if (fs::exists(name)) {
        return name;
    }
    if (const char* dir = std::getenv("GR_CONFIG_DIR"); dir != nullptr && *dir != '\0') {
        const fs::path candidate = fs::path(dir) / name;
        if (fs::exists(candidate)) {
            return candidate.string();
        }
    }
    throw IoError("config file not found: " + name +
                  " (also tried GR_CONFIG_DIR when set)");
}

namespace {

double number_of(const Config& cfg, const std::string& key) {
    return config_number(cfg.get(key), key, cfg.origin);
}

double number_or(const Config& cfg, const std::string& key, double fallback) {
    return cfg.has(key) ? number_of(cfg, key) : fallback;
}

}  // namespace

DeploymentScenario scenario_from_config(const Config& cfg) {
    cfg.check_schema({
        "area_m2", "radius_min_m", "radius_max_m", "cell_geometry", "edge_snr_target",
        "path_loss.exponent", "path_loss.reference_loss_db", "path_loss.reference_distance_m",
        "link.bandwidth_hz", "link.noise_psd", "link.interference_w",
        "power.drain_efficiency", "power.circuit_psd", "power.static_power_w",
    });

    DeploymentScenario s;
    s.area_m2 = number_of(cfg, "area_m2");
    s.radius_min_m = number_of(cfg, "radius_min_m");
    s.radius_max_m = number_of(cfg, "radius_max_m");
    s.edge_snr_target = number_of(cfg, "edge_snr_target");
    s.path_loss.exponent = number_of(cfg, "path_loss.exponent");
    s.path_loss.reference_loss_db = number_of(cfg, "path_loss.reference_loss_db");
    s.path_loss.reference_distance_m = number_of(cfg, "path_loss.reference_distance_m");
    s.link.bandwidth_hz = number_of(cfg, "link.bandwidth_hz");
    s.link.noise_psd = number_of(cfg, "link.noise_psd");
    s.link.interference_w = number_or(cfg, "link.interference_w", 0.0);
    s.power_model.drain_efficiency = number_or(cfg, "power.drain_efficiency", 1.0);
    s.power_model.circuit_psd = number_or(cfg, "power.circuit_psd", 0.0);
    s.power_model.static_power_w = number_or(cfg, "power.static_power_w", 0.0);

    const std::string geometry = cfg.get("cell_geometry");
    if (geometry == "hexagon") {
        s.geometry = CellGeometry::hexagon;
    } else if (geometry == "circle") {
        s.geometry = CellGeometry::circle;
    } else {
        throw SchemaError(cfg.origin + ": cell_geometry must be 'hexagon' or 'circle'");
    }
    s.validate();
    return s;
}

CostModel cost_from_config(const Config& cfg) {
    cfg.check_schema({
        "capex_per_site", "depreciation_years", "opex_fixed_per_site_year",
        "energy_price_per_joule",
    });
    CostModel c;
    c.capex_per_site = number_of(cfg, "capex_per_site");
    c.depreciation_years = number_of(cfg, "depreciation_years");
    c.opex_fixed_per_site_year = number_of(cfg, "opex_fixed_per_site_year");
    c.energy_price_per_joule = number_of(cfg, "energy_price_per_joule");
    c.validate();
    return c;
}

PacketBatch batch_from_config(const Config& cfg) {
    cfg.check_schema({"deadline_s", "packet"}, {"packet"});
    PacketBatch batch;
    batch.deadline_s = number_of(cfg, "deadline_s");
    for (const std::string& entry : cfg.get_all("packet")) {
        std::istringstream in(entry);
        std::string bits_text;
        std::string arrival_text;
        if (!(in >> bits_text >> arrival_text) || !(in >> std::ws).eof()) {
            throw SchemaError(cfg.origin + ": packet must be '<bits> <arrival_s>', got '" +
                              entry + "'");
        }
        batch.packet_bits.push_back(config_number(bits_text, "packet bits", cfg.origin));
        batch.arrival_s.push_back(config_number(arrival_text, "packet arrival", cfg.origin));
    }
    batch.validate();
    return batch;
}

}  // namespace greenradio::cli
