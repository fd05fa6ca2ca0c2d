#include "enscast/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace enscast {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cell += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cell += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            cells.push_back(cell);
            cell.clear();
        } else if (c != '\r') {
            cell += c;
        }
    }
    cells.push_back(cell);
    return cells;
}

}  // namespace

std::string format_number(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    return buffer;
}

std::vector<TimeSeries> load_m4_csv(std::istream& in, const std::string& source_name) {
    std::vector<TimeSeries> out;
    std::string line;
    std::size_t line_number = 0;
    bool header_skipped = false;
    while (std::getline(in, line)) {
        ++line_number;
        if (!header_skipped) {
            header_skipped = true;
            continue;
        }
        if (line.empty() || line == "\r") continue;
        const std::vector<std::string> cells = split_csv_line(line);
        if (cells.empty() || cells[0].empty()) {
            throw std::runtime_error(source_name + ":" + std::to_string(line_number) +
                                     ": missing series id");
        }
        const std::string& id = cells[0];
        const Frequency freq = frequency_from_prefix(id[0]);
        std::vector<double> values;
        values.reserve(cells.size() - 1);
        for (std::size_t i = 1; i < cells.size(); ++i) {
            if (cells[i].empty()) break;  // trailing empty cells end the series
            std::size_t consumed = 0;
            double v = 0.0;
            try {
                v = std::stod(cells[i], &consumed);
            } catch (const std::exception&) {
                consumed = 0;
            }
            if (consumed != cells[i].size()) {
                throw std::runtime_error(source_name + ":" + std::to_string(line_number) +
                                         ": cell " + std::to_string(i + 1) + " ('" + cells[i] +
                                         "') is not a number");
            }
            values.push_back(v);
        }
        out.emplace_back(id, freq, std::move(values));
    }
    return out;
}

std::vector<TimeSeries> load_m4_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_m4_csv(in, path);
}

std::string to_m4_csv(const std::vector<TimeSeries>& series) {
    std::size_t max_len = 0;
    for (const TimeSeries& s : series) max_len = std::max(max_len, s.size());
    std::ostringstream out;
    out << "id";
    for (std::size_t i = 1; i <= max_len; ++i) out << ",V" << i;
    out << "\n";
    for (const TimeSeries& s : series) {
        out << '"' << s.id() << '"';
        for (double v : s.values()) out << ',' << format_number(v);
        for (std::size_t i = s.size(); i < max_len; ++i) out << ',';
        out << "\n";
    }
    return out.str();
}

}  // namespace enscast
