#pragma once

#include "greenradio/curve.hpp"
#include "greenradio/linkmodel.hpp"

namespace greenradio {

enum class CellGeometry { hexagon, circle };

/// Geometry, propagation, radio, and load assumptions for a coverage-driven
/// network deployment. Per-cell throughput follows the cell-edge SNR target
/// (every user served at the rate the edge supports).
struct DeploymentScenario {
    double area_m2 = 0.0;
    double radius_min_m = 0.0;
    double radius_max_m = 0.0;
    PathLossModel path_loss;
    LinkParams link;          // per-cell bandwidth and noise
    PowerModel power_model;
    double edge_snr_target = 1.0;  // linear
    CellGeometry geometry = CellGeometry::hexagon;

    void validate() const;
};

/// Annualized site economics: CapEx spread linearly over the depreciation
/// period, fixed OpEx (lease + maintenance), and the electricity bill.
struct CostModel {
    double capex_per_site = 0.0;
    double depreciation_years = 1.0;
    double opex_fixed_per_site_year = 0.0;
    double energy_price_per_joule = 0.0;

    void validate() const;
};

struct DeploymentMetrics {
    double radius_m = 0.0;
    double n_sites = 0.0;  // whole number from evaluate_deployment; fractional from the continuous variant
    double tx_power_per_site_w = 0.0;
    double supply_power_per_site_w = 0.0;
    double network_throughput_bps = 0.0;
    double annual_cost = 0.0;  // currency per year
    double de = 0.0;           // bit per currency unit, annualized
    double ee = 0.0;           // bit per joule
};

inline constexpr double kSecondsPerYear = 31536000.0;  // 365 days

double cell_area_m2(double radius_m, CellGeometry geometry);

// ceil(area / cell_area), at least 1.
long long sites_for_area(double area_m2, double radius_m, CellGeometry geometry);

// Exact ratio, no ceiling; used by property tests to avoid quantization steps.
double sites_for_area_continuous(double area_m2, double radius_m, CellGeometry geometry);

// Transmit power needed to hit the edge SNR target at distance radius_m:
// gamma * W * N0 * path_loss(radius). Scales as radius^alpha.
double edge_tx_power_w(double radius_m, const DeploymentScenario& scenario);

DeploymentMetrics evaluate_deployment(double radius_m, const DeploymentScenario& scenario,
                                      const CostModel& cost);
DeploymentMetrics evaluate_deployment_continuous(double radius_m, const DeploymentScenario& scenario,
                                                 const CostModel& cost);

// DE-EE curve over log-spaced radii, ordered by radius ascending; the aux
// column records the radius behind each point.
Curve de_ee_sweep(const DeploymentScenario& scenario, const CostModel& cost, long n_points);

// Picks the radius that maximizes EE among deployments meeting the throughput
// target within the annual budget. Throws std::domain_error when infeasible.
DeploymentMetrics plan_deployment(const DeploymentScenario& scenario, const CostModel& cost,
                                  double throughput_target_bps, double annual_budget);

}  // namespace greenradio
