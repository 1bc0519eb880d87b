#include "greenradio/tradeoffs.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace greenradio {

namespace {

constexpr double kLn2 = std::numbers::ln2;

std::string num_to_string(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

double circuit_floor_w(const LinkParams& link, const PowerModel& pm) {
    return pm.circuit_psd * link.bandwidth_hz + pm.static_power_w;
}

// Largest practical-EE value over se for a fixed link, located with an
// expanding bracket so callers need not guess where the bell sits.
OperatingPoint find_ee_peak_auto(const LinkParams& link, const PowerModel& pm) {
    const auto ee = [&](double se) { return se_ee_practical(se, link, pm); };
    double hi = 1.0;
    double v_hi = ee(hi);
    for (int i = 0; i < 60; ++i) {
        const double v_next = ee(hi * 2.0);
        if (!(v_next > v_hi)) {
            break;
        }
        hi *= 2.0;
        v_hi = v_next;
    }
    const Extremum peak = maximize_unimodal(ee, SearchBracket{1e-12, hi * 4.0, 1e-12});
    return {peak.x, peak.value};
}

// Bisection for se in [lo, hi] with ee(lo) - target and ee(hi) - target of
// opposite sign. The profile is monotone on the given side of the peak.
double bisect_se_for_ee(const LinkParams& link, const PowerModel& pm, double target,
                        double lo, double hi) {
    const auto g = [&](double se) { return se_ee_practical(se, link, pm) - target; };
    double a = lo;
    double b = hi;
    for (int i = 0; i < 200; ++i) {
        const double m = 0.5 * (a + b);
        if (m == a || m == b) {
            break;
        }
        if ((g(a) <= 0.0) == (g(m) <= 0.0)) {
            a = m;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

void append_common_metadata(Curve& c, const Range& range) {
    c.metadata["range.min"] = num_to_string(range.min);
    c.metadata["range.max"] = num_to_string(range.max);
    c.metadata["range.count"] = std::to_string(range.count);
    c.metadata["range.spacing"] = resolves_to_log(range) ? "log" : "linear";
}

void append_pm_metadata(Curve& c, const PowerModel& pm) {
    c.metadata["drain_efficiency"] = num_to_string(pm.drain_efficiency);
    c.metadata["circuit_psd"] = num_to_string(pm.circuit_psd);
    c.metadata["static_power_w"] = num_to_string(pm.static_power_w);
}

}  // namespace

double se_ee_ideal(double se, double noise_psd) {
    if (!(se > 0.0) || !std::isfinite(se)) {
        throw std::invalid_argument("se must be finite and > 0");
    }
    if (!(noise_psd > 0.0) || !std::isfinite(noise_psd)) {
        throw std::invalid_argument("noise_psd must be finite and > 0");
    }
    return se / (std::expm1(se * kLn2) * noise_psd);
}

double se_ee_practical(double se, const LinkParams& link, const PowerModel& pm) {
    if (!(se > 0.0) || !std::isfinite(se)) {
        throw std::invalid_argument("se must be finite and > 0");
    }
    const double rate_bps = link.bandwidth_hz * se;
    const double tx_w = tx_power_for_rate_w(rate_bps, link);
    const double supply_w = supply_power_w(tx_w, link.bandwidth_hz, pm);
    return rate_bps / supply_w;
}

OperatingPoint peak_ee(const LinkParams& link, const PowerModel& pm, const SearchBracket& se_bracket) {
    link.validate();
    pm.validate();
    if (!(circuit_floor_w(link, pm) > 0.0)) {
        throw std::domain_error(
            "no interior peak: the SE-EE curve is monotone without circuit or static power");
    }
    const Extremum peak = maximize_unimodal(
        [&](double se) { return se_ee_practical(se, link, pm); }, se_bracket);
    return {peak.x, peak.value};
}

double bw_pw_ideal(double bandwidth_hz, double rate_bps, double noise_psd) {
    return tx_power_for_rate_w(rate_bps, LinkParams{bandwidth_hz, noise_psd, 0.0});
}

double bw_pw_practical(double bandwidth_hz, double rate_bps, double noise_psd, const PowerModel& pm) {
    return supply_power_w(bw_pw_ideal(bandwidth_hz, rate_bps, noise_psd), bandwidth_hz, pm);
}

OperatingPoint optimal_bandwidth(double rate_bps, double noise_psd, const PowerModel& pm,
                                 const SearchBracket& w_bracket) {
    pm.validate();
    if (!(rate_bps > 0.0) || !std::isfinite(rate_bps)) {
        throw std::invalid_argument("rate_bps must be finite and > 0");
    }
    if (!(pm.circuit_psd > 0.0)) {
        throw std::domain_error(
            "no interior minimum: without bandwidth-dependent circuit power the "
            "total power keeps falling as bandwidth grows");
    }
    const Extremum valley = minimize_unimodal(
        [&](double w) { return bw_pw_practical(w, rate_bps, noise_psd, pm); }, w_bracket);
    return {valley.x, valley.value};
}

double dl_pw_ideal(double bit_duration_s, double bandwidth_hz, double noise_psd) {
    if (!(bit_duration_s > 0.0) || !std::isfinite(bit_duration_s)) {
        throw std::invalid_argument("bit_duration_s must be finite and > 0");
    }
    return bit_duration_s *
           tx_power_for_rate_w(1.0 / bit_duration_s, LinkParams{bandwidth_hz, noise_psd, 0.0});
}

double dl_pw_practical(double bit_duration_s, double bandwidth_hz, double noise_psd,
                       const PowerModel& pm) {
    if (!(bit_duration_s > 0.0) || !std::isfinite(bit_duration_s)) {
        throw std::invalid_argument("bit_duration_s must be finite and > 0");
    }
    const LinkParams link{bandwidth_hz, noise_psd, 0.0};
    const double tx_w = tx_power_for_rate_w(1.0 / bit_duration_s, link);
    return bit_duration_s * supply_power_w(tx_w, bandwidth_hz, pm);
}

OperatingPoint optimal_bit_duration(double bandwidth_hz, double noise_psd, const PowerModel& pm,
                                    const SearchBracket& t_bracket) {
    pm.validate();
    if (!(circuit_floor_w(LinkParams{bandwidth_hz, noise_psd, 0.0}, pm) > 0.0)) {
        throw std::domain_error(
            "no interior minimum: energy per bit keeps falling with duration "
            "without circuit or static power");
    }
    const Extremum valley = minimize_unimodal(
        [&](double t) { return dl_pw_practical(t, bandwidth_hz, noise_psd, pm); }, t_bracket);
    return {valley.x, valley.value};
}

EeContour ee_contour_bw_pw(double target_ee, double noise_psd, const PowerModel& pm,
                           const Range& w_range) {
    pm.validate();
    if (!(target_ee > 0.0) || !std::isfinite(target_ee)) {
        throw std::invalid_argument("target_ee must be finite and > 0");
    }

    EeContour contour;
    for (Curve* c : {&contour.lower, &contour.upper}) {
        c->x_label = "bandwidth_hz";
        c->y_label = "supply_power_w";
        c->metadata["target_ee"] = num_to_string(target_ee);
        c->metadata["noise_psd"] = num_to_string(noise_psd);
        append_pm_metadata(*c, pm);
        append_common_metadata(*c, w_range);
    }
    contour.lower.metadata["branch"] = "lower";
    contour.upper.metadata["branch"] = "upper";

    double max_achievable_ee = 0.0;
    for (double w : sample_range(w_range)) {
        const LinkParams link{w, noise_psd, 0.0};
        const auto supply_at = [&](double se) {
            return supply_power_w(tx_power_for_rate_w(w * se, link), w, pm);
        };

        if (circuit_floor_w(link, pm) > 0.0) {
            // Bell-shaped EE-vs-power profile: zero at both ends, one peak.
            const OperatingPoint peak = find_ee_peak_auto(link, pm);
            if (peak.objective > max_achievable_ee) {
                max_achievable_ee = peak.objective;
            }
            if (peak.objective < target_ee) {
                continue;
            }
            // One root on each side of the peak.
            double se_lo_end = peak.x;
            while (se_ee_practical(se_lo_end, link, pm) > target_ee && se_lo_end > 1e-300) {
                se_lo_end *= 0.5;
            }
            double se_hi_end = peak.x;
            for (int i = 0; i < 200 && se_ee_practical(se_hi_end, link, pm) > target_ee; ++i) {
                se_hi_end *= 2.0;
            }
            const double se_low = bisect_se_for_ee(link, pm, target_ee, se_lo_end, peak.x);
            const double se_high = bisect_se_for_ee(link, pm, target_ee, peak.x, se_hi_end);
            contour.lower.points.push_back({w, supply_at(se_low)});
            contour.upper.points.push_back({w, supply_at(se_high)});
        } else {
            // Monotone profile decreasing from eta / (N0 ln 2): a single root.
            const double sup_ee = pm.drain_efficiency / (noise_psd * kLn2);
            if (sup_ee > max_achievable_ee) {
                max_achievable_ee = sup_ee;
            }
            if (!(target_ee < sup_ee)) {
                continue;
            }
            double se_hi_end = 1.0;
            for (int i = 0; i < 200 && se_ee_practical(se_hi_end, link, pm) > target_ee; ++i) {
                se_hi_end *= 2.0;
            }
            double se_lo_end = se_hi_end;
            while (se_ee_practical(se_lo_end, link, pm) < target_ee && se_lo_end > 1e-300) {
                se_lo_end *= 0.5;
            }
            const double se_root = bisect_se_for_ee(link, pm, target_ee, se_lo_end, se_hi_end);
            contour.lower.points.push_back({w, supply_at(se_root)});
        }
    }

    if (contour.lower.points.empty() && contour.upper.points.empty()) {
        throw std::domain_error("target EE unachievable over the given bandwidth range; "
                                "maximum achievable EE is " + num_to_string(max_achievable_ee) +
                                " bit/J");
    }
    return contour;
}

const char* curve_kind_name(CurveKind kind) {
    switch (kind) {
        case CurveKind::se_ee_ideal: return "se_ee_ideal";
        case CurveKind::se_ee_practical: return "se_ee_practical";
        case CurveKind::bw_pw_ideal: return "bw_pw_ideal";
        case CurveKind::bw_pw_practical: return "bw_pw_practical";
        case CurveKind::dl_pw_ideal: return "dl_pw_ideal";
        case CurveKind::dl_pw_practical: return "dl_pw_practical";
    }
    return "unknown";
}

Curve sweep(CurveKind kind, const SweepParams& params, const Range& range) {
    if (range.count < 2) {
        throw std::invalid_argument("sweep needs at least 2 points");
    }

    Curve curve;
    curve.metadata["kind"] = curve_kind_name(kind);
    append_common_metadata(curve, range);

    const LinkParams& link = params.link;
    const PowerModel& pm = params.pm;

    switch (kind) {
        case CurveKind::se_ee_ideal:
            curve.x_label = "se_bps_per_hz";
            curve.y_label = "ee_bit_per_joule";
            curve.metadata["noise_psd"] = num_to_string(link.noise_psd);
            break;
        case CurveKind::se_ee_practical:
            curve.x_label = "se_bps_per_hz";
            curve.y_label = "ee_bit_per_joule";
            curve.metadata["bandwidth_hz"] = num_to_string(link.bandwidth_hz);
            curve.metadata["noise_psd"] = num_to_string(link.noise_psd);
            curve.metadata["interference_w"] = num_to_string(link.interference_w);
            append_pm_metadata(curve, pm);
            break;
        case CurveKind::bw_pw_ideal:
            curve.x_label = "bandwidth_hz";
            curve.y_label = "tx_power_w";
            curve.metadata["rate_bps"] = num_to_string(params.rate_bps);
            curve.metadata["noise_psd"] = num_to_string(link.noise_psd);
            break;
        case CurveKind::bw_pw_practical:
            curve.x_label = "bandwidth_hz";
            curve.y_label = "supply_power_w";
            curve.metadata["rate_bps"] = num_to_string(params.rate_bps);
            curve.metadata["noise_psd"] = num_to_string(link.noise_psd);
            append_pm_metadata(curve, pm);
            break;
        case CurveKind::dl_pw_ideal:
            curve.x_label = "bit_duration_s";
            curve.y_label = "energy_per_bit_j";
            curve.metadata["bandwidth_hz"] = num_to_string(link.bandwidth_hz);
            curve.metadata["noise_psd"] = num_to_string(link.noise_psd);
            break;
        case CurveKind::dl_pw_practical:
            curve.x_label = "bit_duration_s";
            curve.y_label = "energy_per_bit_j";
            curve.metadata["bandwidth_hz"] = num_to_string(link.bandwidth_hz);
            curve.metadata["noise_psd"] = num_to_string(link.noise_psd);
            append_pm_metadata(curve, pm);
            break;
    }

    for (double x : sample_range(range)) {
        double y = 0.0;
        switch (kind) {
            case CurveKind::se_ee_ideal:
                y = se_ee_ideal(x, link.noise_psd);
                break;
            case CurveKind::se_ee_practical:
                y = se_ee_practical(x, link, pm);
                break;
            case CurveKind::bw_pw_ideal:
                y = bw_pw_ideal(x, params.rate_bps, link.noise_psd);
                break;
            case CurveKind::bw_pw_practical:
                y = bw_pw_practical(x, params.rate_bps, link.noise_psd, pm);
                break;
            case CurveKind::dl_pw_ideal:
                y = dl_pw_ideal(x, link.bandwidth_hz, link.noise_psd);
                break;
            case CurveKind::dl_pw_practical:
                y = dl_pw_practical(x, link.bandwidth_hz, link.noise_psd, pm);
                break;
        }
        curve.points.push_back({x, y});
    }

    validate_curve(curve);
    return curve;
}

}  // namespace greenradio
