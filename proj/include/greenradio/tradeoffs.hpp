#pragma once

#include "greenradio/curve.hpp"
#include "greenradio/linkmodel.hpp"
#include "greenradio/numerics.hpp"

namespace greenradio {

/// A solved point on a tradeoff curve. `x` is the searched variable
/// (spectral efficiency, bandwidth, or bit duration depending on the solver)
/// and `objective` the value attained there.
struct OperatingPoint {
    double x = 0.0;
    double objective = 0.0;
};

// --- SE-EE -----------------------------------------------------------------

// eta_EE = eta_SE / ((2^eta_SE - 1) N0), bit/J. Stable down to se ~ 1e-300;
// the se -> 0 limit is 1 / (N0 ln 2).
double se_ee_ideal(double se, double noise_psd);

// eta_EE with amplifier, circuit, and static power in the denominator.
// Reduces to se_ee_ideal under an ideal PowerModel with zero interference.
double se_ee_practical(double se, const LinkParams& link, const PowerModel& pm);

// Peak of the bell-shaped practical SE-EE curve. Requires circuit or static
// power (circuit_psd * W + static_power_w > 0), otherwise the curve is
// monotone and has no interior peak.
OperatingPoint peak_ee(const LinkParams& link, const PowerModel& pm, const SearchBracket& se_bracket);

// --- BW-PW -----------------------------------------------------------------

// P = W N0 (2^(R/W) - 1), W. Decreasing in bandwidth with infimum N0 R ln 2.
double bw_pw_ideal(double bandwidth_hz, double rate_bps, double noise_psd);

// Total supply power: ideal transmit power through the PowerModel.
double bw_pw_practical(double bandwidth_hz, double rate_bps, double noise_psd, const PowerModel& pm);

// Bandwidth minimizing total supply power at a fixed rate. Requires
// circuit_psd > 0, otherwise the minimum is at W -> infinity.
OperatingPoint optimal_bandwidth(double rate_bps, double noise_psd, const PowerModel& pm,
                                 const SearchBracket& w_bracket);

// --- DL-PW -----------------------------------------------------------------

// Energy per bit E_b = W N0 t_b (2^(1/(t_b W)) - 1), J/bit; decreasing in t_b
// with infimum N0 ln 2.
double dl_pw_ideal(double bit_duration_s, double bandwidth_hz, double noise_psd);

// Energy per bit including supply power; cup-shaped when circuit or static
// power is present.
double dl_pw_practical(double bit_duration_s, double bandwidth_hz, double noise_psd,
                       const PowerModel& pm);

// Bottom of the practical cup. Requires circuit_psd * W + static_power_w > 0.
OperatingPoint optimal_bit_duration(double bandwidth_hz, double noise_psd, const PowerModel& pm,
                                    const SearchBracket& t_bracket);

// --- Constant-EE contour in the BW-PW plane ---------------------------------

/// For each sampled bandwidth, the supply power levels at which the link
/// attains exactly `target_ee`. With circuit/static power the EE-vs-power
/// profile is bell shaped, so there are two solution branches; with a
/// monotone profile only `lower` is populated. Bandwidths where the target
/// is unachievable are omitted.
struct EeContour {
    Curve lower;
    Curve upper;
};

EeContour ee_contour_bw_pw(double target_ee, double noise_psd, const PowerModel& pm,
                           const Range& w_range);

// --- Sweeps ------------------------------------------------------------------

enum class CurveKind {
    se_ee_ideal,
    se_ee_practical,
    bw_pw_ideal,
    bw_pw_practical,
    dl_pw_ideal,
    dl_pw_practical,
};

const char* curve_kind_name(CurveKind kind);

struct SweepParams {
    LinkParams link;        // W, N0, I; for bw-pw kinds only N0 is used
    PowerModel pm;          // ignored by the *_ideal kinds
    double rate_bps = 0.0;  // bw-pw kinds only
};

// Samples the chosen relation over `range` (the swept variable is the curve's
// x axis). The emitted metadata records every generating parameter.
Curve sweep(CurveKind kind, const SweepParams& params, const Range& range);

}  // namespace greenradio
