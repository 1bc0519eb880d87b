#include "greenradio/curve.hpp"

#include <cmath>
#include <stdexcept>

namespace greenradio {

void validate_curve(const Curve& curve, bool require_increasing_x) {
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        if (!std::isfinite(curve.points[i].x) || !std::isfinite(curve.points[i].y)) {
            throw std::invalid_argument("curve contains a non-finite point at index " + std::to_string(i));
        }
        if (require_increasing_x && i > 0 && !(curve.points[i].x > curve.points[i - 1].x)) {
            throw std::invalid_argument("curve x values must be strictly increasing");
        }
    }
    if (!curve.aux_label.empty() && curve.aux.size() != curve.points.size()) {
        throw std::invalid_argument("curve aux column length does not match point count");
    }
    for (double a : curve.aux) {
        if (!std::isfinite(a)) {
            throw std::invalid_argument("curve aux column contains a non-finite value");
        }
    }
}

bool resolves_to_log(const Range& range) {
    switch (range.spacing) {
        case Spacing::linear:
            return false;
        case Spacing::logarithmic:
            return true;
        case Spacing::automatic:
        default:
            return range.min > 0.0 && range.max / range.min >= 1e3;
    }
}

std::vector<double> sample_range(const Range& range) {
    if (!std::isfinite(range.min) || !std::isfinite(range.max) || !(range.min < range.max)) {
        if (!(range.count == 1 && range.min == range.max)) {
            throw std::invalid_argument("range requires min < max");
        }
    }
    if (range.count < 1) {
        throw std::invalid_argument("range count must be >= 1");
    }
    if (range.spacing == Spacing::logarithmic && !(range.min > 0.0)) {
        throw std::invalid_argument("logarithmic range requires min > 0");
    }

    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(range.count));
    if (range.count == 1) {
        xs.push_back(range.min);
        return xs;
    }

    const bool log_scale = resolves_to_log(range);
    const double lo = log_scale ? std::log(range.min) : range.min;
    const double hi = log_scale ? std::log(range.max) : range.max;
    const double step = (hi - lo) / static_cast<double>(range.count - 1);
    for (long i = 0; i < range.count; ++i) {
        double u = (i == range.count - 1) ? hi : lo + step * static_cast<double>(i);
        xs.push_back(log_scale ? std::exp(u) : u);
    }
    // Endpoints are emitted exactly.
    xs.front() = range.min;
    xs.back() = range.max;
    return xs;
}

}  // namespace greenradio
