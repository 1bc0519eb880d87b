#include "greenradio/deployment.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace greenradio {

namespace {

constexpr long kPlanGridPoints = 4096;

std::string num_to_string(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void check_radius_in_range(double radius_m, const DeploymentScenario& s) {
    if (!(radius_m >= s.radius_min_m) || !(radius_m <= s.radius_max_m)) {
        throw std::invalid_argument("radius " + num_to_string(radius_m) +
                                    " m is outside the scenario range [" +
                                    num_to_string(s.radius_min_m) + ", " +
                                    num_to_string(s.radius_max_m) + "] m");
    }
}

DeploymentMetrics evaluate_with_sites(double radius_m, double n_sites,
                                      const DeploymentScenario& s, const CostModel& cost) {
    DeploymentMetrics m;
    m.radius_m = radius_m;
    m.n_sites = n_sites;
    m.tx_power_per_site_w = edge_tx_power_w(radius_m, s);
    m.supply_power_per_site_w =
        supply_power_w(m.tx_power_per_site_w, s.link.bandwidth_hz, s.power_model);

    const double per_cell_bps =
        s.link.bandwidth_hz * std::log2(1.0 + s.edge_snr_target);
    m.network_throughput_bps = n_sites * per_cell_bps;

    const double annual_cost_per_site = cost.capex_per_site / cost.depreciation_years +
                                        cost.opex_fixed_per_site_year +
                                        cost.energy_price_per_joule *
                                            m.supply_power_per_site_w * kSecondsPerYear;
    m.annual_cost = n_sites * annual_cost_per_site;
    m.de = m.network_throughput_bps * kSecondsPerYear / m.annual_cost;
    m.ee = m.network_throughput_bps / (n_sites * m.supply_power_per_site_w);
    return m;
}

}  // namespace

void DeploymentScenario::validate() const {
    if (!(area_m2 > 0.0) || !std::isfinite(area_m2)) {
        throw std::invalid_argument("area_m2 must be finite and > 0");
    }
    if (!(radius_min_m > 0.0) || !(radius_min_m < radius_max_m) || !std::isfinite(radius_max_m)) {
        throw std::invalid_argument("radius range requires 0 < min < max");
    }
    path_loss.validate();
    link.validate();
    power_model.validate();
    if (!(edge_snr_target > 0.0) || !std::isfinite(edge_snr_target)) {
        throw std::invalid_argument("edge_snr_target must be finite and > 0");
    }
}

void CostModel::validate() const {
    if (!(capex_per_site >= 0.0) || !std::isfinite(capex_per_site)) {
        throw std::invalid_argument("capex_per_site must be finite and >= 0");
    }
    if (!(depreciation_years > 0.0) || !std::isfinite(depreciation_years)) {
        throw std::invalid_argument("depreciation_years must be finite and > 0");
    }
    if (!(opex_fixed_per_site_year >= 0.0) || !std::isfinite(opex_fixed_per_site_year)) {
        throw std::invalid_argument("opex_fixed_per_site_year must be finite and >= 0");
    }
    if (!(energy_price_per_joule >= 0.0) || !std::isfinite(energy_price_per_joule)) {
        throw std::invalid_argument("energy_price_per_joule must be finite and >= 0");
    }
}

double cell_area_m2(double radius_m, CellGeometry geometry) {
    if (!(radius_m > 0.0) || !std::isfinite(radius_m)) {
        throw std::invalid_argument("radius_m must be finite and > 0");
    }
    const double r2 = radius_m * radius_m;
    return geometry == CellGeometry::hexagon ? 1.5 * std::sqrt(3.0) * r2
                                             : std::numbers::pi * r2;
}

long long sites_for_area(double area_m2, double radius_m, CellGeometry geometry) {
    if (!(area_m2 > 0.0) || !std::isfinite(area_m2)) {
        throw std::invalid_argument("area_m2 must be finite and > 0");
    }
    const double n = std::ceil(area_m2 / cell_area_m2(radius_m, geometry));
    return n < 1.0 ? 1LL : static_cast<long long>(n);
}

double sites_for_area_continuous(double area_m2, double radius_m, CellGeometry geometry) {
    if (!(area_m2 > 0.0) || !std::isfinite(area_m2)) {
        throw std::invalid_argument("area_m2 must be finite and > 0");
    }
    return area_m2 / cell_area_m2(radius_m, geometry);
}

double edge_tx_power_w(double radius_m, const DeploymentScenario& scenario) {
    scenario.validate();
    check_radius_in_range(radius_m, scenario);
    return scenario.edge_snr_target * scenario.link.bandwidth_hz * scenario.link.noise_psd *
           path_loss_linear(radius_m, scenario.path_loss);
}

DeploymentMetrics evaluate_deployment(double radius_m, const DeploymentScenario& scenario,
                                      const CostModel& cost) {
    scenario.validate();
    cost.validate();
    check_radius_in_range(radius_m, scenario);
    const double n = static_cast<double>(sites_for_area(scenario.area_m2, radius_m, scenario.geometry));
    return evaluate_with_sites(radius_m, n, scenario, cost);
}

DeploymentMetrics evaluate_deployment_continuous(double radius_m, const DeploymentScenario& scenario,
                                                 const CostModel& cost) {
    scenario.validate();
    cost.validate();
    check_radius_in_range(radius_m, scenario);
    const double n = sites_for_area_continuous(scenario.area_m2, radius_m, scenario.geometry);
    return evaluate_with_sites(radius_m, n, scenario, cost);
}

Curve de_ee_sweep(const DeploymentScenario& scenario, const CostModel& cost, long n_points) {
    scenario.validate();
    cost.validate();
    if (n_points < 1) {
        throw std::invalid_argument("de_ee_sweep needs at least 1 point");
    }

    Curve curve;
    curve.x_label = "de_bit_per_currency";
    curve.y_label = "ee_bit_per_joule";
    curve.aux_label = "radius_m";
    curve.metadata["area_m2"] = num_to_string(scenario.area_m2);
    curve.metadata["radius_min_m"] = num_to_string(scenario.radius_min_m);
    curve.metadata["radius_max_m"] = num_to_string(scenario.radius_max_m);
    curve.metadata["cell_geometry"] = scenario.geometry == CellGeometry::hexagon ? "hexagon" : "circle";
    curve.metadata["edge_snr_target"] = num_to_string(scenario.edge_snr_target);
    curve.metadata["path_loss.exponent"] = num_to_string(scenario.path_loss.exponent);
    curve.metadata["path_loss.reference_loss_db"] = num_to_string(scenario.path_loss.reference_loss_db);
    curve.metadata["path_loss.reference_distance_m"] = num_to_string(scenario.path_loss.reference_distance_m);
    curve.metadata["link.bandwidth_hz"] = num_to_string(scenario.link.bandwidth_hz);
    curve.metadata["link.noise_psd"] = num_to_string(scenario.link.noise_psd);
    curve.metadata["link.interference_w"] = num_to_string(scenario.link.interference_w);
    curve.metadata["power.drain_efficiency"] = num_to_string(scenario.power_model.drain_efficiency);
    curve.metadata["power.circuit_psd"] = num_to_string(scenario.power_model.circuit_psd);
    curve.metadata["power.static_power_w"] = num_to_string(scenario.power_model.static_power_w);
    curve.metadata["cost.capex_per_site"] = num_to_string(cost.capex_per_site);
    curve.metadata["cost.depreciation_years"] = num_to_string(cost.depreciation_years);
    curve.metadata["cost.opex_fixed_per_site_year"] = num_to_string(cost.opex_fixed_per_site_year);
    curve.metadata["cost.energy_price_per_joule"] = num_to_string(cost.energy_price_per_joule);
    curve.metadata["seconds_per_year"] = num_to_string(kSecondsPerYear);
    curve.metadata["capex_annualization"] = "linear_over_depreciation_years";
    curve.metadata["n_points"] = std::to_string(n_points);

    const Range radii{scenario.radius_min_m, scenario.radius_max_m, n_points, Spacing::logarithmic};
    for (double r : sample_range(radii)) {
        const DeploymentMetrics m = evaluate_deployment(r, scenario, cost);
        curve.points.push_back({m.de, m.ee});
        curve.aux.push_back(r);
    }
    validate_curve(curve, /*require_increasing_x=*/false);
    return curve;
}

DeploymentMetrics plan_deployment(const DeploymentScenario& scenario, const CostModel& cost,
                                  double throughput_target_bps, double annual_budget) {
    scenario.validate();
    cost.validate();
    if (!(throughput_target_bps > 0.0) || !std::isfinite(throughput_target_bps)) {
        throw std::invalid_argument("throughput_target_bps must be finite and > 0");
    }
    if (!(annual_budget > 0.0)) {
        throw std::invalid_argument("annual_budget must be > 0");
    }

    const Range radii{scenario.radius_min_m, scenario.radius_max_m, kPlanGridPoints,
                      Spacing::logarithmic};
    const std::vector<double> grid = sample_range(radii);

    const auto feasible = [&](const DeploymentMetrics& m) {
        return m.network_throughput_bps >= throughput_target_bps && m.annual_cost <= annual_budget;
    };

    long best = -1;
    double best_ee = 0.0;
    double max_throughput_in_budget = 0.0;
    std::vector<DeploymentMetrics> metrics;
    metrics.reserve(grid.size());
    for (double r : grid) {
        metrics.push_back(evaluate_deployment(r, scenario, cost));
        const DeploymentMetrics& m = metrics.back();
        if (m.annual_cost <= annual_budget && m.network_throughput_bps > max_throughput_in_budget) {
            max_throughput_in_budget = m.network_throughput_bps;
        }
        if (feasible(m) && (best < 0 || m.ee > best_ee)) {
            best = static_cast<long>(metrics.size()) - 1;
            best_ee = m.ee;
        }
    }

    if (best < 0) {
        throw std::domain_error("plan infeasible: no radius meets the throughput target within "
                                "the budget; maximum achievable throughput within budget is " +
                                num_to_string(max_throughput_in_budget) + " bit/s");
    }

    // EE falls with radius under the cell-edge throughput convention, so the
    // best grid point sits against a feasibility boundary. Tighten it by
    // bisecting the boundary against the infeasible neighbor, if any.
    DeploymentMetrics chosen = metrics[static_cast<std::size_t>(best)];
    if (best > 0 && !feasible(metrics[static_cast<std::size_t>(best) - 1])) {
        double lo = grid[static_cast<std::size_t>(best) - 1];  // infeasible
        double hi = grid[static_cast<std::size_t>(best)];      // feasible
        for (int i = 0; i < 100; ++i) {
            const double mid = 0.5 * (lo + hi);
            if (mid == lo || mid == hi) {
                break;
            }
            const DeploymentMetrics m = evaluate_deployment(mid, scenario, cost);
            if (feasible(m)) {
                hi = mid;
                if (m.ee >= chosen.ee) {
                    chosen = m;
                }
            } else {
                lo = mid;
            }
        }
    }
    return chosen;
}

}  // namespace greenradio
