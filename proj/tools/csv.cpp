#include "csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace greenradio::cli {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) {
        cells.push_back(trim(cell));
    }
    return cells;
}

double parse_number(const std::string& text, const std::string& origin) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0') {
        throw IoError(origin + ": not a number: '" + text + "'");
    }
    return v;
}

}  // namespace

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string curve_to_csv(const Curve& curve) {
    std::string out;
    for (const auto& [key, value] : curve.metadata) {
        out += "# " + key + " = " + value + "\n";
    }
    out += curve.x_label + "," + curve.y_label;
    if (!curve.aux_label.empty()) {
        out += "," + curve.aux_label;
    }
    out += "\n";
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        out += format_number(curve.points[i].x) + "," + format_number(curve.points[i].y);
        if (!curve.aux_label.empty()) {
            out += "," + format_number(curve.aux[i]);
        }
        out += "\n";
    }
    return out;
}

Curve curve_from_csv(std::istream& in, const std::string& origin) {
    Curve curve;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            const std::string body = trim(line.substr(1));
            const auto eq = body.find('=');
            if (eq == std::string::npos) {
                throw IoError(origin + ": malformed metadata line: '" + line + "'");
            }
            curve.metadata[trim(body.substr(0, eq))] = trim(body.substr(eq + 1));
            continue;
        }
        const std::vector<std::string> cells = split_csv_row(line);
        if (!header_seen) {
            if (cells.size() < 2 || cells.size() > 3) {
                throw IoError(origin + ": header must have 2 or 3 columns");
            }
            curve.x_label = cells[0];
            curve.y_label = cells[1];
            if (cells.size() == 3) {
                curve.aux_label = cells[2];
            }
            header_seen = true;
            continue;
        }
        const std::size_t expected = curve.aux_label.empty() ? 2 : 3;
        if (cells.size() != expected) {
            throw IoError(origin + ": row has " + std::to_string(cells.size()) +
                          " columns, expected " + std::to_string(expected));
        }
        curve.points.push_back({parse_number(cells[0], origin), parse_number(cells[1], origin)});
        if (!curve.aux_label.empty()) {
            curve.aux.push_back(parse_number(cells[2], origin));
        }
    }
    if (!header_seen) {
        throw IoError(origin + ": no CSV header found");
    }
    return curve;
}

Curve curve_from_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    return curve_from_csv(in, path);
}

std::string render_report(const std::vector<std::pair<std::string, std::string>>& fields) {
    std::string out;
    for (const auto& [key, value] : fields) {
        out += key + " = " + value + "\n";
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path + " for writing");
    }
    out << content;
    if (!out) {
        throw IoError("failed while writing " + path);
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string gnuplot_script_for(const Curve& curve, const std::string& csv_path) {
    std::string out;
    out += "set datafile separator ','\n";
    out += "set xlabel '" + curve.x_label + "'\n";
    out += "set ylabel '" + curve.y_label + "'\n";
    const auto kind = curve.metadata.find("kind");
    const std::string title = kind != curve.metadata.end() ? kind->second : curve.y_label;
    if (curve.metadata.count("range.spacing") && curve.metadata.at("range.spacing") == "log") {
        out += "set logscale x\n";
    }
    out += "plot '" + csv_path + "' using 1:2 with lines title '" + title + "'\n";
    return out;
}

}  // namespace greenradio::cli
