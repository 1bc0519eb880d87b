#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "config.hpp"
#include "csv.hpp"
#include "greenradio/deployment.hpp"
#include "greenradio/scheduling.hpp"
#include "greenradio/tradeoffs.hpp"

namespace greenradio::cli {

namespace {

// A parameter can come from its flag, from the --config file, or from a
// default; flags win over the file.
struct ParamSet {
    std::optional<Config> config;

    double num(const CLI::Option* opt, double flag_value, const std::string& key,
               std::optional<double> fallback) const {
        if (opt->count() > 0) {
            return flag_value;
        }
        if (config && config->has(key)) {
            return config_number(config->get(key), key, config->origin);
        }
        if (fallback) {
            return *fallback;
        }
        throw SchemaError("missing required parameter '" + key + "' (pass " +
                          opt->get_name() + " or set it in the config file)");
    }

    std::string str(const CLI::Option* opt, const std::string& flag_value, const std::string& key,
                    std::optional<std::string> fallback) const {
        if (opt->count() > 0) {
            return flag_value;
        }
        if (config && config->has(key)) {
            return config->get(key);
        }
        if (fallback) {
            return *fallback;
        }
        throw SchemaError("missing required parameter '" + key + "' (pass " +
                          opt->get_name() + " or set it in the config file)");
    }

    bool flag(const CLI::Option* opt, const std::string& key) const {
        if (opt->count() > 0) {
            return true;
        }
        if (config && config->has(key)) {
            const std::string& v = config->get(key);
            if (v == "true") {
                return true;
            }
            if (v == "false") {
                return false;
            }
            throw SchemaError(config->origin + ": '" + key + "' must be true or false");
        }
        return false;
    }

    bool present(const CLI::Option* opt, const std::string& key) const {
        return opt->count() > 0 || (config && config->has(key));
    }
};

ParamSet load_params(const CLI::Option* config_opt, const std::string& config_path,
                     const std::set<std::string>& allowed,
                     const std::set<std::string>& repeatable = {}) {
    ParamSet params;
    if (config_opt->count() > 0) {
        params.config = parse_config_file(resolve_config_path(config_path));
        params.config->check_schema(allowed, repeatable);
    }
    return params;
}

// Scenario/cost references inside a run config resolve relative to that
// config's directory first, so shipped example sets stay relocatable.
std::string resolve_referenced_path(const std::string& name, const ParamSet& params) {
    namespace fs = std::filesystem;
    if (params.config && !fs::path(name).is_absolute()) {
        const fs::path sibling = fs::path(params.config->origin).parent_path() / name;
        if (fs::exists(sibling)) {
            return sibling.string();
        }
    }
    return resolve_config_path(name);
}

void emit(const std::string& content, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << content;
    } else {
        write_text_file(output_path, content);
    }
}

void reject_practical_params(bool ideal, const ParamSet& params,
                             const std::vector<std::pair<const CLI::Option*, std::string>>& opts) {
    if (!ideal) {
        return;
    }
    for (const auto& [opt, key] : opts) {
        if (params.present(opt, key)) {
            throw SchemaError("'" + key + "' has no effect on the ideal curve; "
                              "drop it or drop 'ideal'");
        }
    }
}

void add_curve_subcommands(CLI::App& curve) {
    // --- curve se-ee ---------------------------------------------------
    {
        auto* cmd = curve.add_subcommand("se-ee", "Spectral efficiency vs energy efficiency");
        auto opts = std::make_shared<std::map<std::string, std::string>>();
        auto nums = std::make_shared<std::map<std::string, double>>();

        auto* o_config = cmd->add_option("--config", (*opts)["config"], "Config file with these keys");
        cmd->add_option("-o,--output", (*opts)["output"], "Output CSV path (stdout when omitted)");
        auto* o_se = cmd->add_option("--se", (*opts)["se"], "SE range min:max:count[:log|:lin], bit/s/Hz");
        auto* o_n0 = cmd->add_option("--n0,--noise-psd", (*nums)["noise_psd"], "Noise PSD N0, W/Hz");
        auto* o_ideal = cmd->add_flag("--ideal", "Shannon-only curve, no power model");
        auto* o_w = cmd->add_option("--w,--bandwidth-hz", (*nums)["bandwidth_hz"], "Bandwidth W, Hz");
        auto* o_i = cmd->add_option("--i,--interference-w", (*nums)["interference_w"], "Interference power, W");
        auto* o_eta = cmd->add_option("--eta-pa,--drain-efficiency", (*nums)["drain_efficiency"], "PA drain efficiency (0,1]");
        auto* o_rhoc = cmd->add_option("--rho-c,--circuit-psd", (*nums)["circuit_psd"], "Circuit power density, W/Hz");
        auto* o_p0 = cmd->add_option("--p0,--static-power-w", (*nums)["static_power_w"], "Static power, W");

        cmd->callback([=]() {
            const ParamSet params = load_params(o_config, (*opts)["config"],
                {"se", "noise_psd", "ideal", "bandwidth_hz", "interference_w",
                 "drain_efficiency", "circuit_psd", "static_power_w"});
            const bool is_ideal = params.flag(o_ideal, "ideal");
            reject_practical_params(is_ideal, params,
                {{o_w, "bandwidth_hz"}, {o_i, "interference_w"}, {o_eta, "drain_efficiency"},
                 {o_rhoc, "circuit_psd"}, {o_p0, "static_power_w"}});

            const Range range = parse_range(params.str(o_se, (*opts)["se"], "se", std::nullopt));
            SweepParams sp;
            sp.link.noise_psd = params.num(o_n0, (*nums)["noise_psd"], "noise_psd", std::nullopt);
            CurveKind kind = CurveKind::se_ee_ideal;
            if (!is_ideal) {
                kind = CurveKind::se_ee_practical;
                sp.link.bandwidth_hz = params.num(o_w, (*nums)["bandwidth_hz"], "bandwidth_hz", 1.0);
                sp.link.interference_w = params.num(o_i, (*nums)["interference_w"], "interference_w", 0.0);
                sp.pm.drain_efficiency = params.num(o_eta, (*nums)["drain_efficiency"], "drain_efficiency", 1.0);
                sp.pm.circuit_psd = params.num(o_rhoc, (*nums)["circuit_psd"], "circuit_psd", 0.0);
                sp.pm.static_power_w = params.num(o_p0, (*nums)["static_power_w"], "static_power_w", 0.0);
            }
            emit(curve_to_csv(sweep(kind, sp, range)), (*opts)["output"]);
        });
    }

    // --- curve bw-pw ---------------------------------------------------
    {
        auto* cmd = curve.add_subcommand("bw-pw", "Bandwidth vs power at fixed rate");
        auto opts = std::make_shared<std::map<std::string, std::string>>();
        auto nums = std::make_shared<std::map<std::string, double>>();

        auto* o_config = cmd->add_option("--config", (*opts)["config"], "Config file with these keys");
        cmd->add_option("-o,--output", (*opts)["output"], "Output CSV path (stdout when omitted)");
        auto* o_w = cmd->add_option("--w", (*opts)["w"], "Bandwidth range min:max:count[:log|:lin], Hz");
        auto* o_rate = cmd->add_option("--rate,--rate-bps", (*nums)["rate_bps"], "Target rate R, bit/s");
        auto* o_n0 = cmd->add_option("--n0,--noise-psd", (*nums)["noise_psd"], "Noise PSD N0, W/Hz");
        auto* o_ideal = cmd->add_flag("--ideal", "Shannon-only curve, no power model");
        auto* o_eta = cmd->add_option("--eta-pa,--drain-efficiency", (*nums)["drain_efficiency"], "PA drain efficiency (0,1]");
        auto* o_rhoc = cmd->add_option("--rho-c,--circuit-psd", (*nums)["circuit_psd"], "Circuit power density, W/Hz");
        auto* o_p0 = cmd->add_option("--p0,--static-power-w", (*nums)["static_power_w"], "Static power, W");

        cmd->callback([=]() {
            const ParamSet params = load_params(o_config, (*opts)["config"],
                {"w", "rate_bps", "noise_psd", "ideal", "drain_efficiency", "circuit_psd",
                 "static_power_w"});
            const bool is_ideal = params.flag(o_ideal, "ideal");
            reject_practical_params(is_ideal, params,
                {{o_eta, "drain_efficiency"}, {o_rhoc, "circuit_psd"}, {o_p0, "static_power_w"}});

            const Range range = parse_range(params.str(o_w, (*opts)["w"], "w", std::nullopt));
            SweepParams sp;
            sp.rate_bps = params.num(o_rate, (*nums)["rate_bps"], "rate_bps", std::nullopt);
            sp.link.noise_psd = params.num(o_n0, (*nums)["noise_psd"], "noise_psd", std::nullopt);
            CurveKind kind = CurveKind::bw_pw_ideal;
            if (!is_ideal) {
                kind = CurveKind::bw_pw_practical;
                sp.pm.drain_efficiency = params.num(o_eta, (*nums)["drain_efficiency"], "drain_efficiency", 1.0);
                sp.pm.circuit_psd = params.num(o_rhoc, (*nums)["circuit_psd"], "circuit_psd", 0.0);
                sp.pm.static_power_w = params.num(o_p0, (*nums)["static_power_w"], "static_power_w", 0.0);
            }
            emit(curve_to_csv(sweep(kind, sp, range)), (*opts)["output"]);
        });
    }

    // --- curve dl-pw ---------------------------------------------------
    {
        auto* cmd = curve.add_subcommand("dl-pw", "Bit duration vs energy per bit");
        auto opts = std::make_shared<std::map<std::string, std::string>>();
        auto nums = std::make_shared<std::map<std::string, double>>();

        auto* o_config = cmd->add_option("--config", (*opts)["config"], "Config file with these keys");
        cmd->add_option("-o,--output", (*opts)["output"], "Output CSV path (stdout when omitted)");
        auto* o_tb = cmd->add_option("--tb", (*opts)["tb"], "Bit duration range min:max:count[:log|:lin], s");
        auto* o_w = cmd->add_option("--w,--bandwidth-hz", (*nums)["bandwidth_hz"], "Bandwidth W, Hz");
        auto* o_n0 = cmd->add_option("--n0,--noise-psd", (*nums)["noise_psd"], "Noise PSD N0, W/Hz");
        auto* o_ideal = cmd->add_flag("--ideal", "Shannon-only curve, no power model");
        auto* o_eta = cmd->add_option("--eta-pa,--drain-efficiency", (*nums)["drain_efficiency"], "PA drain efficiency (0,1]");
        auto* o_rhoc = cmd->add_option("--rho-c,--circuit-psd", (*nums)["circuit_psd"], "Circuit power density, W/Hz");
        auto* o_p0 = cmd->add_option("--p0,--static-power-w", (*nums)["static_power_w"], "Static power, W");

        cmd->callback([=]() {
            const ParamSet params = load_params(o_config, (*opts)["config"],
                {"tb", "bandwidth_hz", "noise_psd", "ideal", "drain_efficiency", "circuit_psd",
                 "static_power_w"});
            const bool is_ideal = params.flag(o_ideal, "ideal");
            reject_practical_params(is_ideal, params,
                {{o_eta, "drain_efficiency"}, {o_rhoc, "circuit_psd"}, {o_p0, "static_power_w"}});

            const Range range = parse_range(params.str(o_tb, (*opts)["tb"], "tb", std::nullopt));
            SweepParams sp;
            sp.link.bandwidth_hz = params.num(o_w, (*nums)["bandwidth_hz"], "bandwidth_hz", std::nullopt);
            sp.link.noise_psd = params.num(o_n0, (*nums)["noise_psd"], "noise_psd", std::nullopt);
            CurveKind kind = CurveKind::dl_pw_ideal;
            if (!is_ideal) {
                kind = CurveKind::dl_pw_practical;
                sp.pm.drain_efficiency = params.num(o_eta, (*nums)["drain_efficiency"], "drain_efficiency", 1.0);
                sp.pm.circuit_psd = params.num(o_rhoc, (*nums)["circuit_psd"], "circuit_psd", 0.0);
                sp.pm.static_power_w = params.num(o_p0, (*nums)["static_power_w"], "static_power_w", 0.0);
            }
            emit(curve_to_csv(sweep(kind, sp, range)), (*opts)["output"]);
        });
    }

    // --- curve de-ee ---------------------------------------------------
    {
        auto* cmd = curve.add_subcommand("de-ee", "Deployment efficiency vs energy efficiency");
        auto opts = std::make_shared<std::map<std::string, std::string>>();
        auto nums = std::make_shared<std::map<std::string, double>>();

        auto* o_config = cmd->add_option("--config", (*opts)["config"], "Config file with these keys");
        cmd->add_option("-o,--output", (*opts)["output"], "Output CSV path (stdout when omitted)");
        auto* o_scenario = cmd->add_option("--scenario", (*opts)["scenario"], "Deployment scenario config");
        auto* o_cost = cmd->add_option("--cost", (*opts)["cost"], "Cost model config");
        auto* o_points = cmd->add_option("--points", (*nums)["points"], "Number of radius samples");

        cmd->callback([=]() {
            const ParamSet params = load_params(o_config, (*opts)["config"],
                                                {"scenario", "cost", "points"});
            const std::string scenario_path = resolve_referenced_path(
                params.str(o_scenario, (*opts)["scenario"], "scenario", std::nullopt), params);
            const std::string cost_path = resolve_referenced_path(
                params.str(o_cost, (*opts)["cost"], "cost", std::nullopt), params);
            const double points = params.num(o_points, (*nums)["points"], "points", 200.0);
            if (points < 1 || points != std::floor(points)) {
                throw SchemaError("points must be a positive integer");
            }
            const DeploymentScenario scenario = scenario_from_config(parse_config_file(scenario_path));
            const CostModel cost = cost_from_config(parse_config_file(cost_path));
            Curve c = de_ee_sweep(scenario, cost, static_cast<long>(points));
            c.metadata["scenario_file"] = std::filesystem::path(scenario_path).filename().string();
            c.metadata["cost_file"] = std::filesystem::path(cost_path).filename().string();
            emit(curve_to_csv(c), (*opts)["output"]);
        });
    }
}

void add_peak_subcommands(CLI::App& peak) {
    // --- peak se-ee ----------------------------------------------------
    {
        auto* cmd = peak.add_subcommand("se-ee", "Peak of the practical SE-EE bell");
        auto opts = std::make_shared<std::map<std::string, std::string>>();
        auto nums = std::make_shared<std::map<std::string, double>>();

        auto* o_config = cmd->add_option("--config", (*opts)["config"], "Config file with these keys");
        cmd->add_option("-o,--output", (*opts)["output"], "Output report path (stdout when omitted)");
        auto* o_w = cmd->add_option("--w,--bandwidth-hz", (*nums)["bandwidth_hz"], "Bandwidth W, Hz");
        auto* o_n0 = cmd->add_option("--n0,--noise-psd", (*nums)["noise_psd"], "Noise PSD N0, W/Hz");
        auto* o_i = cmd->add_option("--i,--interference-w", (*nums)["interference_w"], "Interference power, W");
        auto* o_eta = cmd->add_option("--eta-pa,--drain-efficiency", (*nums)["drain_efficiency"], "PA drain efficiency (0,1]");
        auto* o_rhoc = cmd->add_option("--rho-c,--circuit-psd", (*nums)["circuit_psd"], "Circuit power density, W/Hz");
        auto* o_p0 = cmd->add_option("--p0,--static-power-w", (*nums)["static_power_w"], "Static power, W");
        auto* o_bracket = cmd->add_option("--se-bracket", (*opts)["se_bracket"], "Search bracket lo:hi (default 1e-9:1e6)");
        auto* o_tol = cmd->add_option("--tolerance", (*nums)["tolerance"], "Relative search tolerance");

        cmd->callback([=]() {
            const ParamSet params = load_params(o_config, (*opts)["config"],
                {"bandwidth_hz", "noise_psd", "interference_w", "drain_efficiency", "circuit_psd",
                 "static_power_w", "se_bracket", "tolerance"});
            LinkParams link;
            link.bandwidth_hz = params.num(o_w, (*nums)["bandwidth_hz"], "bandwidth_hz", 1.0);
            link.noise_psd = params.num(o_n0, (*nums)["noise_psd"], "noise_psd", std::nullopt);
            link.interference_w = params.num(o_i, (*nums)["interference_w"], "interference_w", 0.0);
            PowerModel pm;
            pm.drain_efficiency = params.num(o_eta, (*nums)["drain_efficiency"], "drain_efficiency", 1.0);
            pm.circuit_psd = params.num(o_rhoc, (*nums)["circuit_psd"], "circuit_psd", 0.0);
            pm.static_power_w = params.num(o_p0, (*nums)["static_power_w"], "static_power_w", 0.0);
            const double tol = params.num(o_tol, (*nums)["tolerance"], "tolerance", 1e-9);
            const SearchBracket bracket =
                parse_bracket(params.str(o_bracket, (*opts)["se_bracket"], "se_bracket", std::string("1e-9:1e6")), tol);

            const OperatingPoint point = peak_ee(link, pm, bracket);
            emit(render_report({
                {"command", "peak.se-ee"},
                {"bandwidth_hz", format_number(link.bandwidth_hz)},
                {"noise_psd", format_number(link.noise_psd)},
                {"interference_w", format_number(link.interference_w)},
                {"drain_efficiency", format_number(pm.drain_efficiency)},
                {"circuit_psd", format_number(pm.circuit_psd)},
                {"static_power_w", format_number(pm.static_power_w)},
                {"se_bps_per_hz", format_number(point.x)},
                {"ee_bit_per_joule", format_number(point.objective)},
            }), (*opts)["output"]);
        });
    }

    // --- peak bw-pw ----------------------------------------------------
    {
        auto* cmd = peak.add_subcommand("bw-pw", "Supply-power minimum over bandwidth at fixed rate");
        auto opts = std::make_shared<std::map<std::string, std::string>>();
        auto nums = std::make_shared<std::map<std::string, double>>();

        auto* o_config = cmd->add_option("--config", (*opts)["config"], "Config file with these keys");
        cmd->add_option("-o,--output", (*opts)["output"], "Output report path (stdout when omitted)");
        auto* o_rate = cmd->add_option("--rate,--rate-bps", (*nums)["rate_bps"], "Target rate R, bit/s");
        auto* o_n0 = cmd->add_option("--n0,--noise-psd", (*nums)["noise_psd"], "Noise PSD N0, W/Hz");
        auto* o_eta = cmd->add_option("--eta-pa,--drain-efficiency", (*nums)["drain_efficiency"], "PA drain efficiency (0,1]");
        auto* o_rhoc = cmd->add_option("--rho-c,--circuit-psd", (*nums)["circuit_psd"], "Circuit power density, W/Hz");
        auto* o_p0 = cmd->add_option("--p0,--static-power-w", (*nums)["static_power_w"], "Static power, W");
        auto* o_bracket = cmd->add_option("--w-bracket", (*opts)["w_bracket"], "Search bracket lo:hi (default rate-scaled)");
        auto* o_tol = cmd->add_option("--tolerance", (*nums)["tolerance"], "Relative search tolerance");

        cmd->callback([=]() {
            const ParamSet params = load_params(o_config, (*opts)["config"],
                {"rate_bps", "noise_psd", "drain_efficiency", "circuit_psd", "static_power_w",
                 "w_bracket", "tolerance"});
            const double rate = params.num(o_rate, (*nums)["rate_bps"], "rate_bps", std::nullopt);
            const double n0 = params.num(o_n0, (*nums)["noise_psd"], "noise_psd", std::nullopt);
            PowerModel pm;
            pm.drain_efficiency = params.num(o_eta, (*nums)["drain_efficiency"], "drain_efficiency", 1.0);
            pm.circuit_psd = params.num(o_rhoc, (*nums)["circuit_psd"], "circuit_psd", 0.0);
            pm.static_power_w = params.num(o_p0, (*nums)["static_power_w"], "static_power_w", 0.0);
            const double tol = params.num(o_tol, (*nums)["tolerance"], "tolerance", 1e-9);
            SearchBracket bracket{1e-6 * rate, 1e6 * rate, tol};
            if (params.present(o_bracket, "w_bracket")) {
                bracket = parse_bracket(params.str(o_bracket, (*opts)["w_bracket"], "w_bracket", std::nullopt), tol);
            }

            const OperatingPoint point = optimal_bandwidth(rate, n0, pm, bracket);
            emit(render_report({
                {"command", "peak.bw-pw"},
                {"rate_bps", format_number(rate)},
                {"noise_psd", format_number(n0)},
                {"drain_efficiency", format_number(pm.drain_efficiency)},
                {"circuit_psd", format_number(pm.circuit_psd)},
                {"static_power_w", format_number(pm.static_power_w)},
                {"bandwidth_hz", format_number(point.x)},
                {"supply_power_w", format_number(point.objective)},
            }), (*opts)["output"]);
        });
    }

    // --- peak dl-pw ----------------------------------------------------
    {
        auto* cmd = peak.add_subcommand("dl-pw", "Energy-per-bit minimum over bit duration");
        auto opts = std::make_shared<std::map<std::string, std::string>>();
        auto nums = std::make_shared<std::map<std::string, double>>();

        auto* o_config = cmd->add_option("--config", (*opts)["config"], "Config file with these keys");
        cmd->add_option("-o,--output", (*opts)["output"], "Output report path (stdout when omitted)");
        auto* o_w = cmd->add_option("--w,--bandwidth-hz", (*nums)["bandwidth_hz"], "Bandwidth W, Hz");
        auto* o_n0 = cmd->add_option("--n0,--noise-psd", (*nums)["noise_psd"], "Noise PSD N0, W/Hz");
        auto* o_eta = cmd->add_option("--eta-pa,--drain-efficiency", (*nums)["drain_efficiency"], "PA drain efficiency (0,1]");
        auto* o_rhoc = cmd->add_option("--rho-c,--circuit-psd", (*nums)["circuit_psd"], "Circuit power density, W/Hz");
        auto* o_p0 = cmd->add_option("--p0,--static-power-w", (*nums)["static_power_w"], "Static power, W");
        auto* o_bracket = cmd->add_option("--tb-bracket", (*opts)["tb_bracket"], "Search bracket lo:hi (default 1e-9:1e9)");
        auto* o_tol = cmd->add_option("--tolerance", (*nums)["tolerance"], "Relative search tolerance");

        cmd->callback([=]() {
            const ParamSet params = load_params(o_config, (*opts)["config"],
                {"bandwidth_hz", "noise_psd", "drain_efficiency", "circuit_psd", "static_power_w",
                 "tb_bracket", "tolerance"});
            const double w = params.num(o_w, (*nums)["bandwidth_hz"], "bandwidth_hz", std::nullopt);
            const double n0 = params.num(o_n0, (*nums)["noise_psd"], "noise_psd", std::nullopt);
            PowerModel pm;
            pm.drain_efficiency = params.num(o_eta, (*nums)["drain_efficiency"], "drain_efficiency", 1.0);
            pm.circuit_psd = params.num(o_rhoc, (*nums)["circuit_psd"], "circuit_psd", 0.0);
            pm.static_power_w = params.num(o_p0, (*nums)["static_power_w"], "static_power_w", 0.0);
            const double tol = params.num(o_tol, (*nums)["tolerance"], "tolerance", 1e-9);
            const SearchBracket bracket =
                parse_bracket(params.str(o_bracket, (*opts)["tb_bracket"], "tb_bracket", std::string("1e-9:1e9")), tol);

            const OperatingPoint point = optimal_bit_duration(w, n0, pm, bracket);
            emit(render_report({
                {"command", "peak.dl-pw"},
                {"bandwidth_hz", format_number(w)},
                {"noise_psd", format_number(n0)},
                {"drain_efficiency", format_number(pm.drain_efficiency)},
                {"circuit_psd", format_number(pm.circuit_psd)},
                {"static_power_w", format_number(pm.static_power_w)},
                {"bit_duration_s", format_number(point.x)},
                {"energy_per_bit_j", format_number(point.objective)},
            }), (*opts)["output"]);
        });
    }
}

void add_plan_subcommand(CLI::App& app) {
    auto* cmd = app.add_subcommand("plan", "Pick the cell radius for a throughput target and budget");
    auto opts = std::make_shared<std::map<std::string, std::string>>();
    auto nums = std::make_shared<std::map<std::string, double>>();

    auto* o_config = cmd->add_option("--config", (*opts)["config"], "Config file with these keys");
    cmd->add_option("-o,--output", (*opts)["output"], "Output report path (stdout when omitted)");
    auto* o_scenario = cmd->add_option("--scenario", (*opts)["scenario"], "Deployment scenario config");
    auto* o_cost = cmd->add_option("--cost", (*opts)["cost"], "Cost model config");
    auto* o_target = cmd->add_option("--throughput,--throughput-bps", (*nums)["throughput_bps"], "Network throughput target, bit/s");
    auto* o_budget = cmd->add_option("--budget", (*nums)["annual_budget"], "Annual budget, currency/yr");

    cmd->callback([=]() {
        const ParamSet params = load_params(o_config, (*opts)["config"],
                                            {"scenario", "cost", "throughput_bps", "annual_budget"});
        const std::string scenario_path = resolve_referenced_path(
            params.str(o_scenario, (*opts)["scenario"], "scenario", std::nullopt), params);
        const std::string cost_path = resolve_referenced_path(
            params.str(o_cost, (*opts)["cost"], "cost", std::nullopt), params);
        const double target = params.num(o_target, (*nums)["throughput_bps"], "throughput_bps", std::nullopt);
        const double budget = params.num(o_budget, (*nums)["annual_budget"], "annual_budget", std::nullopt);

        const DeploymentScenario scenario = scenario_from_config(parse_config_file(scenario_path));
        const CostModel cost = cost_from_config(parse_config_file(cost_path));
        const DeploymentMetrics m = plan_deployment(scenario, cost, target, budget);
        emit(render_report({
            {"command", "plan"},
            {"scenario_file", std::filesystem::path(scenario_path).filename().string()},
            {"cost_file", std::filesystem::path(cost_path).filename().string()},
            {"throughput_target_bps", format_number(target)},
            {"annual_budget", format_number(budget)},
            {"required_de_bit_per_currency", format_number(target * kSecondsPerYear / budget)},
            {"radius_m", format_number(m.radius_m)},
            {"n_sites", format_number(m.n_sites)},
            {"tx_power_per_site_w", format_number(m.tx_power_per_site_w)},
            {"supply_power_per_site_w", format_number(m.supply_power_per_site_w)},
            {"network_throughput_bps", format_number(m.network_throughput_bps)},
            {"annual_cost", format_number(m.annual_cost)},
            {"de_bit_per_currency", format_number(m.de)},
            {"ee_bit_per_joule", format_number(m.ee)},
            {"seconds_per_year", format_number(kSecondsPerYear)},
        }), (*opts)["output"]);
    });
}

void add_schedule_subcommand(CLI::App& app) {
    auto* cmd = app.add_subcommand("schedule", "Deadline-constrained minimum-energy packet schedule");
    auto opts = std::make_shared<std::map<std::string, std::string>>();
    auto nums = std::make_shared<std::map<std::string, double>>();

    auto* o_config = cmd->add_option("--config", (*opts)["config"], "Config file with these keys");
    cmd->add_option("-o,--output", (*opts)["output"], "Output CSV path (stdout when omitted)");
    auto* o_batch = cmd->add_option("--batch", (*opts)["batch"], "Packet batch config (deadline_s + packet lines)");
    auto* o_w = cmd->add_option("--w,--bandwidth-hz", (*nums)["bandwidth_hz"], "Bandwidth W, Hz");
    auto* o_n0 = cmd->add_option("--n0,--noise-psd", (*nums)["noise_psd"], "Noise PSD N0, W/Hz");
    auto* o_i = cmd->add_option("--i,--interference-w", (*nums)["interference_w"], "Interference power, W");
    auto* o_eta = cmd->add_option("--eta-pa,--drain-efficiency", (*nums)["drain_efficiency"], "PA drain efficiency (0,1]");
    auto* o_rhoc = cmd->add_option("--rho-c,--circuit-psd", (*nums)["circuit_psd"], "Circuit power density, W/Hz");
    auto* o_p0 = cmd->add_option("--p0,--static-power-w", (*nums)["static_power_w"], "Static power, W");
    auto* o_cap = cmd->add_option("--max-tx-power", (*nums)["max_tx_power_w"], "Transmit power cap, W (unlimited when omitted)");
    auto* o_idle = cmd->add_flag("--charge-idle-static",
                                 "Also report static power burned in idle gaps");

    cmd->callback([=]() {
        const ParamSet params = load_params(o_config, (*opts)["config"],
            {"batch", "bandwidth_hz", "noise_psd", "interference_w", "drain_efficiency",
             "circuit_psd", "static_power_w", "max_tx_power_w", "charge_idle_static"});
        const std::string batch_path = resolve_referenced_path(
            params.str(o_batch, (*opts)["batch"], "batch", std::nullopt), params);
        LinkParams link;
        link.bandwidth_hz = params.num(o_w, (*nums)["bandwidth_hz"], "bandwidth_hz", std::nullopt);
        link.noise_psd = params.num(o_n0, (*nums)["noise_psd"], "noise_psd", std::nullopt);
        link.interference_w = params.num(o_i, (*nums)["interference_w"], "interference_w", 0.0);
        PowerModel pm;
        pm.drain_efficiency = params.num(o_eta, (*nums)["drain_efficiency"], "drain_efficiency", 1.0);
        pm.circuit_psd = params.num(o_rhoc, (*nums)["circuit_psd"], "circuit_psd", 0.0);
        pm.static_power_w = params.num(o_p0, (*nums)["static_power_w"], "static_power_w", 0.0);
        const double cap = params.num(o_cap, (*nums)["max_tx_power_w"], "max_tx_power_w",
                                      std::numeric_limits<double>::infinity());
        const bool idle = params.flag(o_idle, "charge_idle_static");

        const PacketBatch batch = batch_from_config(parse_config_file(batch_path));
        const Schedule schedule = lazy_schedule(batch, link, pm, cap);
        const double total_j = schedule_energy_j(batch, schedule, link, pm);

        std::string out;
        out += "# batch_file = " + std::filesystem::path(batch_path).filename().string() + "\n";
        out += "# bandwidth_hz = " + format_number(link.bandwidth_hz) + "\n";
        out += "# charge_idle_static = " + std::string(idle ? "true" : "false") + "\n";
        out += "# circuit_psd = " + format_number(pm.circuit_psd) + "\n";
        out += "# deadline_s = " + format_number(batch.deadline_s) + "\n";
        out += "# drain_efficiency = " + format_number(pm.drain_efficiency) + "\n";
        out += "# interference_w = " + format_number(link.interference_w) + "\n";
        if (std::isfinite(cap)) {
            out += "# max_tx_power_w = " + format_number(cap) + "\n";
        }
        out += "# noise_psd = " + format_number(link.noise_psd) + "\n";
        out += "# static_power_w = " + format_number(pm.static_power_w) + "\n";
        if (!schedule.start_s.empty()) {
            const double finish = schedule.start_s.back() + schedule.durations_s.back();
            out += "# last_finish_s = " + format_number(finish) + "\n";
            if (idle) {
                double idle_s = 0.0;
                for (std::size_t k = 1; k < schedule.start_s.size(); ++k) {
                    idle_s += schedule.start_s[k] -
                              (schedule.start_s[k - 1] + schedule.durations_s[k - 1]);
                }
                out += "# idle_s = " + format_number(idle_s) + "\n";
                out += "# idle_static_energy_j = " + format_number(idle_s * pm.static_power_w) + "\n";
                out += "# total_energy_with_idle_j = " +
                       format_number(total_j + idle_s * pm.static_power_w) + "\n";
            }
        }
        out += "# total_energy_j = " + format_number(total_j) + "\n";
        out += "packet,bits,arrival_s,start_s,duration_s,rate_bps,energy_j\n";
        for (std::size_t k = 0; k < batch.packet_bits.size(); ++k) {
            out += std::to_string(k) + "," + format_number(batch.packet_bits[k]) + "," +
                   format_number(batch.arrival_s[k]) + "," + format_number(schedule.start_s[k]) +
                   "," + format_number(schedule.durations_s[k]) + "," +
                   format_number(batch.packet_bits[k] / schedule.durations_s[k]) + "," +
                   format_number(packet_energy_j(batch.packet_bits[k], schedule.durations_s[k],
                                                 link, pm)) +
                   "\n";
        }
        emit(out, (*opts)["output"]);
    });
}

void add_gnuplot_subcommand(CLI::App& app) {
    auto* cmd = app.add_subcommand("gnuplot", "Emit a gnuplot script next to an exported CSV");
    auto csv_path = std::make_shared<std::string>();
    cmd->add_option("csv", *csv_path, "CSV file produced by the curve command")->required();
    cmd->callback([=]() {
        const Curve curve = curve_from_csv_file(*csv_path);
        write_text_file(*csv_path + ".gp", gnuplot_script_for(curve, *csv_path));
    });
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Green-radio tradeoff toolkit: SE-EE, BW-PW, DL-PW, and DE-EE curves, "
                 "operating-point solvers, deployment planning, and lazy packet scheduling"};
    app.require_subcommand(1);

    auto* curve = app.add_subcommand("curve", "Export a tradeoff curve as CSV");
    curve->require_subcommand(1);
    add_curve_subcommands(*curve);

    auto* peak = app.add_subcommand("peak", "Solve for a curve's optimal operating point");
    peak->require_subcommand(1);
    add_peak_subcommands(*peak);

    add_plan_subcommand(app);
    add_schedule_subcommand(app);
    add_gnuplot_subcommand(app);

    try {
        app.parse(argc, argv);
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: schema: " << e.what() << "\n";
        return 2;
    } catch (const SchemaError& e) {
        std::cerr << "error: schema: " << e.what() << "\n";
        return 2;
    } catch (const EvaluationError& e) {
        std::cerr << "error: domain: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: domain: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: domain: " << e.what() << "\n";
        return 3;
    } catch (const IoError& e) {
        std::cerr << "error: io: " << e.what() << "\n";
        return 4;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: io: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace greenradio::cli
