#include "greenradio/numerics.hpp"

#include <cmath>
#include <limits>

namespace greenradio {

namespace {

double eval_checked(const ScalarFn& f, double x) {
    const double v = f(x);
    if (!std::isfinite(v)) {
        throw EvaluationError("objective returned a non-finite value at x = " + std::to_string(x), x);
    }
    return v;
}

bool use_log_scale(const SearchBracket& b) {
    return b.lo > 0.0 && b.hi / b.lo >= 1e3;
}

Extremum golden_section_max(const ScalarFn& f, const SearchBracket& bracket) {
    bracket.validate();
    const bool log_scale = use_log_scale(bracket);
    const auto to_x = [log_scale](double u) { return log_scale ? std::exp(u) : u; };

    double a = log_scale ? std::log(bracket.lo) : bracket.lo;
    double b = log_scale ? std::log(bracket.hi) : bracket.hi;

    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    const double invphi2 = 1.0 - invphi;

    double c = a + invphi2 * (b - a);
    double d = a + invphi * (b - a);
    double fc = eval_checked(f, to_x(c));
    double fd = eval_checked(f, to_x(d));

    // In log scale the interval width is already a relative measure.
    for (int it = 0; it < 400; ++it) {
        const double width = b - a;
        const double scale = log_scale ? 1.0 : 0.5 * (std::abs(a) + std::abs(b));
        if (width <= bracket.tolerance * scale) {
            break;
        }
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = a + invphi2 * (b - a);
            fc = eval_checked(f, to_x(c));
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = eval_checked(f, to_x(d));
        }
    }

    const double x_star = to_x(0.5 * (a + b));
    return {x_star, eval_checked(f, x_star)};
}

Extremum grid_scan(const ScalarFn& f, const SearchBracket& bracket, long n_points, bool find_max) {
    bracket.validate();
    if (n_points < 2) {
        throw std::invalid_argument("grid oracle needs at least 2 points");
    }
    double best_x = bracket.lo;
    double best_v = eval_checked(f, bracket.lo);
    const double step = (bracket.hi - bracket.lo) / static_cast<double>(n_points - 1);
    for (long i = 1; i < n_points; ++i) {
        const double x = (i == n_points - 1) ? bracket.hi : bracket.lo + step * static_cast<double>(i);
        const double v = eval_checked(f, x);
        if (find_max ? (v > best_v) : (v < best_v)) {
            best_v = v;
            best_x = x;
        }
    }
    return {best_x, best_v};
}

}  // namespace

void SearchBracket::validate() const {
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo >= hi) {
        throw std::invalid_argument("search bracket requires finite lo < hi");
    }
    if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
        throw std::invalid_argument("search bracket tolerance must be > 0");
    }
}

Extremum maximize_unimodal(const ScalarFn& f, const SearchBracket& bracket) {
    return golden_section_max(f, bracket);
}

Extremum minimize_unimodal(const ScalarFn& f, const SearchBracket& bracket) {
    const Extremum flipped = golden_section_max([&f](double x) { return -f(x); }, bracket);
    return {flipped.x, -flipped.value};
}

Extremum grid_maximum_oracle(const ScalarFn& f, const SearchBracket& bracket, long n_points) {
    return grid_scan(f, bracket, n_points, true);
}

Extremum grid_minimum_oracle(const ScalarFn& f, const SearchBracket& bracket, long n_points) {
    return grid_scan(f, bracket, n_points, false);
}

}  // namespace greenradio
