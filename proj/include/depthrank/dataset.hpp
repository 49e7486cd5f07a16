#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "depthrank/errors.hpp"
#include "depthrank/linalg.hpp"

// Dataset ingestion: delimiter-separated values, one observation per row,
// optional single header row (detected when any first-row cell fails to
// parse as a number). Parse failures report file, line and column.

namespace depthrank {

namespace detail {

inline std::vector<std::string> split_fields(const std::string& line) {
    char delim = ',';
    if (line.find(',') == std::string::npos) {
        if (line.find('\t') != std::string::npos) delim = '\t';
        else delim = ' ';
    }
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == delim || (delim == ' ' && ch == '\t')) {
            if (delim == ' ' && cur.empty()) continue; // collapse runs of blanks
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty() || delim != ' ') fields.push_back(cur);
    while (!fields.empty() && fields.back().empty()) fields.pop_back();
    return fields;
}

inline bool parse_cell(const std::string& s, double& out) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    if (a == b) return false;
    const char* first = s.data() + a;
    const char* last = s.data() + b;
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr != last) return false;
    return std::isfinite(out);
}

} // namespace detail

inline Sample load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error(path + ": cannot open file");

    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    std::size_t width = 0;
    bool first_data_row = true;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string stripped = line;
        if (stripped.find_first_not_of(" \t") == std::string::npos) continue;
        auto fields = detail::split_fields(line);
        if (fields.empty()) continue;

        std::vector<double> row(fields.size());
        bool ok = true;
        std::size_t bad_col = 0;
        for (std::size_t c = 0; c < fields.size(); ++c) {
            if (!detail::parse_cell(fields[c], row[c])) {
                ok = false;
                bad_col = c;
                break;
            }
        }
        if (!ok) {
            if (first_data_row) continue; // header row
            throw data_error(path + ":" + std::to_string(lineno) + ": column " +
                             std::to_string(bad_col + 1) + ": cannot parse '" +
                             fields[bad_col] + "' as a finite number");
        }
        if (first_data_row) {
            width = row.size();
            first_data_row = false;
        } else if (row.size() != width) {
            throw data_error(path + ":" + std::to_string(lineno) + ": row has " +
                             std::to_string(row.size()) + " columns, expected " +
                             std::to_string(width));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw data_error(path + ": no data rows");

    Sample s(rows.size(), width);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < width; ++j) s(i, j) = rows[i][j];
    return s;
}

inline void save_dataset(const std::string& path, const Sample& s) {
    std::ofstream out(path);
    if (!out) throw data_error(path + ": cannot open file for writing");
    char buf[64];
    for (std::size_t i = 0; i < s.rows(); ++i) {
        for (std::size_t j = 0; j < s.cols(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", s(i, j));
            out << buf;
            if (j + 1 < s.cols()) out << ',';
        }
        out << '\n';
    }
}

} // namespace depthrank
