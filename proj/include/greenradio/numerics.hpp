#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace greenradio {

/// Thrown when an objective returns NaN or infinity during a search.
class EvaluationError : public std::runtime_error {
public:
    EvaluationError(const std::string& what, double x)
        : std::runtime_error(what), x_(x) {}
    double offending_x() const noexcept { return x_; }

private:
    double x_;
};

struct SearchBracket {
    double lo = 0.0;
    double hi = 0.0;
    double tolerance = 1e-9;  // relative accuracy on x

    void validate() const;  // throws std::invalid_argument
};

struct Extremum {
    double x = 0.0;
    double value = 0.0;
};

using ScalarFn = std::function<double(double)>;

// Golden-section search. The caller guarantees f is unimodal on the bracket.
// Runs in log scale when the bracket spans three decades or more.
Extremum maximize_unimodal(const ScalarFn& f, const SearchBracket& bracket);
Extremum minimize_unimodal(const ScalarFn& f, const SearchBracket& bracket);

// Exhaustive uniform-grid scan, the brute-force reference for tests.
// Ties break toward smaller x. n_points must be >= 2.
Extremum grid_maximum_oracle(const ScalarFn& f, const SearchBracket& bracket, long n_points);
Extremum grid_minimum_oracle(const ScalarFn& f, const SearchBracket& bracket, long n_points);

}  // namespace greenradio
