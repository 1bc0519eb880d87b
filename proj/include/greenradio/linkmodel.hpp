#pragma once

namespace greenradio {

/// Shannon-formula inputs: occupied bandwidth W, one-sided noise PSD N0,
/// and a constant interference power raising the noise floor.
struct LinkParams {
    double bandwidth_hz = 1.0;
    double noise_psd = 1.0;        // W/Hz
    double interference_w = 0.0;   // W

    void validate() const;  // throws std::invalid_argument
};

/// Maps radiated power to supply power:
///   P_supply = P_tx / drain_efficiency + circuit_psd * W + static_power_w
/// The default-constructed model is ideal and reduces every practical
/// formula to its ideal counterpart.
struct PowerModel {
    double drain_efficiency = 1.0;  // (0, 1]
    double circuit_psd = 0.0;       // W per Hz of occupied bandwidth
    double static_power_w = 0.0;    // W

    static PowerModel ideal() { return {}; }
    void validate() const;
};

/// Power-law large-scale attenuation, linear loss = 10^(ref_db/10) * (d/d_ref)^exponent.
struct PathLossModel {
    double exponent = 2.0;
    double reference_loss_db = 0.0;
    double reference_distance_m = 1.0;

    void validate() const;
};

// R = W log2(1 + P / (W N0 + I)), in bit/s.
double capacity_bps(double tx_power_w, const LinkParams& link);

// Exact inverse of capacity_bps: P = (W N0 + I) (2^(R/W) - 1), in W.
double tx_power_for_rate_w(double rate_bps, const LinkParams& link);

double supply_power_w(double tx_power_w, double bandwidth_hz, const PowerModel& pm);

double path_loss_linear(double distance_m, const PathLossModel& plm);

}  // namespace greenradio
