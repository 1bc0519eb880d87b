#include "greenradio/linkmodel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace greenradio {

namespace {
constexpr double kLn2 = std::numbers::ln2;
}

void LinkParams::validate() const {
    if (!(bandwidth_hz > 0.0) || !std::isfinite(bandwidth_hz)) {
        throw std::invalid_argument("bandwidth_hz must be finite and > 0");
    }
    if (!(noise_psd > 0.0) || !std::isfinite(noise_psd)) {
        throw std::invalid_argument("noise_psd must be finite and > 0");
    }
    if (!(interference_w >= 0.0) || !std::isfinite(interference_w)) {
        throw std::invalid_argument("interference_w must be finite and >= 0");
    }
}

void PowerModel::validate() const {
    if (!(drain_efficiency > 0.0) || !(drain_efficiency <= 1.0)) {
        throw std::invalid_argument("drain_efficiency must be in (0, 1]");
    }
    if (!(circuit_psd >= 0.0) || !std::isfinite(circuit_psd)) {
        throw std::invalid_argument("circuit_psd must be finite and >= 0");
    }
    if (!(static_power_w >= 0.0) || !std::isfinite(static_power_w)) {
        throw std::invalid_argument("static_power_w must be finite and >= 0");
    }
}

void PathLossModel::validate() const {
    if (!(exponent >= 2.0) || !std::isfinite(exponent)) {
        throw std::invalid_argument("path-loss exponent must be finite and >= 2");
    }
    if (!std::isfinite(reference_loss_db)) {
        throw std::invalid_argument("reference_loss_db must be finite");
    }
    if (!(reference_distance_m > 0.0) || !std::isfinite(reference_distance_m)) {
        throw std::invalid_argument("reference_distance_m must be finite and > 0");
    }
}

double capacity_bps(double tx_power_w, const LinkParams& link) {
    link.validate();
    if (!(tx_power_w >= 0.0) || !std::isfinite(tx_power_w)) {
        throw std::invalid_argument("tx_power_w must be finite and >= 0");
    }
    const double noise_floor_w = link.bandwidth_hz * link.noise_psd + link.interference_w;
    // log1p keeps the low-SNR regime accurate.
    return link.bandwidth_hz * std::log1p(tx_power_w / noise_floor_w) / kLn2;
}

double tx_power_for_rate_w(double rate_bps, const LinkParams& link) {
    link.validate();
    if (!(rate_bps >= 0.0) || !std::isfinite(rate_bps)) {
        throw std::invalid_argument("rate_bps must be finite and >= 0");
    }
    const double noise_floor_w = link.bandwidth_hz * link.noise_psd + link.interference_w;
    return noise_floor_w * std::expm1(rate_bps / link.bandwidth_hz * kLn2);
}

double supply_power_w(double tx_power_w, double bandwidth_hz, const PowerModel& pm) {
    pm.validate();
    if (!(tx_power_w >= 0.0) || !std::isfinite(tx_power_w)) {
        throw std::invalid_argument("tx_power_w must be finite and >= 0");
    }
    if (!(bandwidth_hz >= 0.0) || !std::isfinite(bandwidth_hz)) {
        throw std::invalid_argument("bandwidth_hz must be finite and >= 0");
    }
    return tx_power_w / pm.drain_efficiency + pm.circuit_psd * bandwidth_hz + pm.static_power_w;
}

double path_loss_linear(double distance_m, const PathLossModel& plm) {
    plm.validate();
    if (!(distance_m > 0.0) || !std::isfinite(distance_m)) {
        throw std::invalid_argument("distance_m must be finite and > 0");
    }
    return std::pow(10.0, plm.reference_loss_db / 10.0) *
           std::pow(distance_m / plm.reference_distance_m, plm.exponent);
}

}  // namespace greenradio
