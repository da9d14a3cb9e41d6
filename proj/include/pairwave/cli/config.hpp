#pragma once

// Run configuration: a JSON document, with command-line flags applied on top.
//
//   {
//     "g": 1.0,                          // or "a" and "rho0"
//     "r_tilde": [1, 10, 50],            // grids: a list, or {"start", "stop", "num", "log"}
//     "tau": {"start": 50, "stop": 100, "num": 2},
//     "r": [...], "t": [...], "R": [...],
//     "m": [-3, -2, -1, 1, 2, 3],        // or {"lo": 1, "hi": 8}
//     "trap": {"kind": "quadratic", "epsilon": 0.05, "volume": 1e5, "value": 0.0, "margin": 0.05},
//     "tol": 1e-8, "contour_angle": 0.1, "region_thresh": 20, "threads": 4,
//     "format": "csv", "out": "table.csv"
//   }

#include <cmath>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pairwave/asymptotics.hpp"
#include "pairwave/error.hpp"
#include "pairwave/homogeneous.hpp"
#include "pairwave/trap.hpp"
#include "pairwave/cli/table.hpp"

namespace pairwave::cli {

struct trap_spec {
    std::string kind = "quadratic";
    double epsilon = 0.05;
    double volume = 1e5;
    double value = 0.0;
    double margin = default_boundary_margin;
};

struct run_config {
    std::optional<double> g;
    std::optional<double> a, rho0;
    std::vector<double> r_tilde, tau, r, t, R;
    std::vector<int> m;
    trap_spec trap;
    double tol = 1e-8;
    double contour_angle = 0.1;
    double region_thresh = default_region_thresh;
    int threads = 1;
    out_format format = out_format::csv;
    std::string out;      // empty: stdout
    bool timestamp = false;

    gas_params gas() const {
        if (g) return gas_params::with_coupling(*g);
        gas_params p;
        if (a) p.a = *a;
        if (rho0) p.rho0 = *rho0;
        p.validate();
        return p;
    }
};

inline std::vector<double> parse_grid(const nlohmann::json& j, const char* name) {
    std::vector<double> out;
    if (j.is_array()) {
        for (const auto& v : j) {
            if (!v.is_number()) fail(errc::config, std::string("config: grid '") + name + "' must hold numbers");
            out.push_back(v.get<double>());
        }
        return out;
    }
    if (j.is_number()) return {j.get<double>()};
    if (!j.is_object()) fail(errc::config, std::string("config: grid '") + name + "' must be a list or a range object");
    const double start = j.at("start").get<double>();
    const double stop = j.at("stop").get<double>();
    const int num = j.at("num").get<int>();
    const bool log = j.value("log", false);
    if (num < 1) fail(errc::config, std::string("config: grid '") + name + "' needs num >= 1");
    if (log && !(start > 0.0 && stop > 0.0)) fail(errc::config, std::string("config: log grid '") + name + "' needs positive ends");
    for (int i = 0; i < num; ++i) {
        const double f = num == 1 ? 0.0 : double(i) / (num - 1);
        out.push_back(log ? start * std::pow(stop / start, f) : start + (stop - start) * f);
    }
    return out;
}

inline std::vector<int> parse_m(const nlohmann::json& j) {
    std::vector<int> out;
    if (j.is_array()) {
        for (const auto& v : j) out.push_back(v.get<int>());
        return out;
    }
    if (!j.is_object()) fail(errc::config, "config: 'm' must be a list or {lo, hi}");
    const int lo = j.at("lo").get<int>(), hi = j.at("hi").get<int>();
    for (int m = lo; m <= hi; ++m) out.push_back(m);
    return out;
}

inline out_format parse_format(const std::string& s) {
    if (s == "csv") return out_format::csv;
    if (s == "jsonl") return out_format::jsonl;
    fail(errc::config, "config: format must be csv or jsonl");
}

inline run_config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::config, "config: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(errc::config, std::string("config: ") + e.what());
    }
    run_config c;
    try {
        if (j.contains("g")) c.g = j["g"].get<double>();
        if (j.contains("a")) c.a = j["a"].get<double>();
        if (j.contains("rho0")) c.rho0 = j["rho0"].get<double>();
        if (j.contains("r_tilde")) c.r_tilde = parse_grid(j["r_tilde"], "r_tilde");
        if (j.contains("tau")) c.tau = parse_grid(j["tau"], "tau");
        if (j.contains("r")) c.r = parse_grid(j["r"], "r");
        if (j.contains("t")) c.t = parse_grid(j["t"], "t");
        if (j.contains("R")) c.R = parse_grid(j["R"], "R");
        if (j.contains("m")) c.m = parse_m(j["m"]);
        if (j.contains("trap")) {
            const auto& tj = j["trap"];
            c.trap.kind = tj.value("kind", c.trap.kind);
            c.trap.epsilon = tj.value("epsilon", c.trap.epsilon);
            c.trap.volume = tj.value("volume", c.trap.volume);
            c.trap.value = tj.value("value", c.trap.value);
            c.trap.margin = tj.value("margin", c.trap.margin);
        }
        c.tol = j.value("tol", c.tol);
        c.contour_angle = j.value("contour_angle", c.contour_angle);
        c.region_thresh = j.value("region_thresh", c.region_thresh);
        c.threads = j.value("threads", c.threads);
        if (j.contains("format")) c.format = parse_format(j["format"].get<std::string>());
        c.out = j.value("out", c.out);
        c.timestamp = j.value("timestamp", c.timestamp);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::config, std::string("config: ") + e.what());
    }
    return c;
}

inline void require_grid(const std::vector<double>& g, const char* name) {
    if (g.empty()) fail(errc::config, std::string("config: grid '") + name + "' is empty");
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!std::isfinite(g[i])) fail(errc::config, std::string("config: grid '") + name + "' has a non-finite value");
        if (i && !(g[i] > g[i - 1])) fail(errc::config, std::string("config: grid '") + name + "' must be strictly increasing");
    }
}

inline void validate_common(const run_config& c) {
    if (!(c.tol > 0.0)) fail(errc::config, "config: tol must be > 0");
    if (!(c.contour_angle > 0.0 && c.contour_angle < 1.5)) fail(errc::config, "config: contour_angle must lie in (0, 1.5)");
    if (!(c.region_thresh > 0.0)) fail(errc::config, "config: region_thresh must be > 0");
    if (c.threads < 1) fail(errc::config, "config: threads must be >= 1");
    try {
        c.gas();
    } catch (const error& e) {
        fail(errc::config, std::string("config: ") + e.what());
    }
}

}  // namespace pairwave::cli
