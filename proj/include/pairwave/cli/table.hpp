#pragma once

// Tabular output as CSV (metadata as leading '#' lines, RFC 4180 quoting) or JSON lines
// (metadata object first). Floats are written with 17 significant digits.

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

namespace pairwave::cli {

enum class out_format { csv, jsonl };

using cell = std::variant<std::monostate, double, long long, bool, std::string>;

struct table {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<cell>> rows;

    void add_meta(std::string key, std::string value) { meta.emplace_back(std::move(key), std::move(value)); }
    void add_meta(std::string key, double value);
};

inline std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void table::add_meta(std::string key, double value) { meta.emplace_back(std::move(key), format_double(value)); }

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

inline std::string csv_cell(const cell& c) {
    struct {
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(double v) const { return format_double(v); }
        std::string operator()(long long v) const { return std::to_string(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string& v) const { return csv_quote(v); }
    } vis;
    return std::visit(vis, c);
}

inline std::string json_cell(const cell& c) {
    struct {
        std::string operator()(std::monostate) const { return "null"; }
        std::string operator()(double v) const { return std::isfinite(v) ? format_double(v) : "null"; }
        std::string operator()(long long v) const { return std::to_string(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string& v) const { return nlohmann::json(v).dump(); }
    } vis;
    return std::visit(vis, c);
}

inline void write_table(std::ostream& os, const table& t, out_format fmt) {
    if (fmt == out_format::csv) {
        for (const auto& [k, v] : t.meta) os << "# " << k << " = " << v << '\n';
        for (std::size_t j = 0; j < t.columns.size(); ++j) os << (j ? "," : "") << csv_quote(t.columns[j]);
        os << '\n';
        for (const auto& row : t.rows) {
            for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << csv_cell(row[j]);
            os << '\n';
        }
        return;
    }
    nlohmann::ordered_json m = nlohmann::ordered_json::object();
    for (const auto& [k, v] : t.meta) m[k] = v;
    os << nlohmann::ordered_json{{"metadata", m}}.dump() << '\n';
    for (const auto& row : t.rows) {
        os << '{';
        for (std::size_t j = 0; j < row.size(); ++j)
            os << (j ? "," : "") << nlohmann::json(t.columns[j]).dump() << ':' << json_cell(row[j]);
        os << "}\n";
    }
}

}  // namespace pairwave::cli
