#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "greenradio/curve.hpp"

namespace greenradio::cli {

class IoError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 12 significant digits, '.' decimal separator.
std::string format_number(double v);

// Metadata comment block ('#'-prefixed, sorted keys), header row, data rows,
// '\n' line endings. Byte-identical for identical curves.
std::string curve_to_csv(const Curve& curve);

// Inverse of curve_to_csv.
Curve curve_from_csv(std::istream& in, const std::string& origin = "<stream>");
Curve curve_from_csv_file(const std::string& path);

// key = value lines in the given order, preceded by nothing; used for the
// structured-report output format.
std::string render_report(const std::vector<std::pair<std::string, std::string>>& fields);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// Minimal gnuplot script plotting the first two CSV columns.
std::string gnuplot_script_for(const Curve& curve, const std::string& csv_path);

}  // namespace greenradio::cli
