#pragma once

#include <map>
#include <string>
#include <vector>

namespace greenradio {

struct CurvePoint {
    double x = 0.0;
    double y = 0.0;
};

/// Ordered sample list with axis metadata; the universal output of every sweep.
/// An optional auxiliary column carries a per-point companion value (e.g. the
/// cell radius that generated a DE-EE point).
struct Curve {
    std::string x_label;
    std::string y_label;
    std::vector<CurvePoint> points;
    std::string aux_label;                        // empty when unused
    std::vector<double> aux;                      // same length as points when aux_label is set
    std::map<std::string, std::string> metadata;  // generating parameters
};

// Checks finiteness and aux consistency; with require_increasing_x also checks
// strict monotonicity (DE-EE sweeps are ordered by radius, so their x column
// is not required to increase).
void validate_curve(const Curve& curve, bool require_increasing_x = true);

enum class Spacing {
    automatic,  // logarithmic when the range spans >= 3 decades, else linear
    linear,
    logarithmic,
};

struct Range {
    double min = 0.0;
    double max = 0.0;
    long count = 0;
    Spacing spacing = Spacing::automatic;
};

bool resolves_to_log(const Range& range);
std::vector<double> sample_range(const Range& range);

}  // namespace greenradio
