#pragma once

// Subcommands of the pairwave tool. Each builds a table from a validated run_config and returns
// the process exit code: 0 clean, 1 configuration or infeasible input, 2 some rows failed.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "pairwave/asymptotics.hpp"
#include "pairwave/cli/config.hpp"
#include "pairwave/cli/pool.hpp"
#include "pairwave/cli/table.hpp"
#include "pairwave/homogeneous.hpp"
#include "pairwave/poles.hpp"
#include "pairwave/trap.hpp"

namespace pairwave::cli {

enum exit_code : int { exit_ok = 0, exit_config = 1, exit_partial = 2 };

struct command_output {
    table tab;
    int code = exit_ok;
};

inline void add_run_meta(table& t, const run_config& c, const char* command) {
    t.add_meta("command", command);
    t.add_meta("units", "hbar = 2m = 1");
    const auto p = c.gas();
    t.add_meta("a", p.a);
    t.add_meta("rho0", p.rho0);
    t.add_meta("g", p.g());
}

inline command_output lambda_table(const run_config& c) {
    validate_common(c);
    require_grid(c.r_tilde, "r_tilde");
    require_grid(c.tau, "tau");
    for (double r : c.r_tilde)
        if (!(r > 0.0)) fail(errc::config, "config: r_tilde values must be > 0");
    for (double t : c.tau)
        if (!(t > 0.0)) fail(errc::config, "config: tau values must be > 0");

    command_output o;
    add_run_meta(o.tab, c, "lambda-table");
    o.tab.add_meta("tol", c.tol);
    o.tab.add_meta("contour_angle", c.contour_angle);
    o.tab.add_meta("region_thresh", c.region_thresh);
    o.tab.columns = {"r_tilde", "tau", "lambda_asym_re", "lambda_asym_im", "lambda_oracle_re", "lambda_oracle_im",
                     "rel_error", "region_profile", "status"};

    struct point {
        double r, tau;
    };
    std::vector<point> pts;
    for (double tau : c.tau)
        for (double r : c.r_tilde) pts.push_back({r, tau});

    asymptotic_options ao;
    ao.c_thresh = c.region_thresh;
    oracle_options oo;
    oo.contour_angle = c.contour_angle;
    oo.tol = c.tol;

    struct result {
        std::vector<cell> row;
        bool flagged = false;
    };
    auto rows = parallel_map<result>(pts.size(), c.threads, [&](std::size_t i) {
        const scaled_point pt{pts[i].r, pts[i].tau};
        result res;
        std::string status;
        cell ar, ai, orr, oi, err;
        std::optional<cplx> a, orc;
        try {
            const auto d = lambda_asymptotic_detailed(pt, ao);
            a = d.value;
            ar = d.value.real();
            ai = d.value.imag();
            if (d.low_confidence) status = "low-confidence asymptotics";
        } catch (const std::exception& e) {
            status = std::string("asymptotic failed: ") + e.what();
            res.flagged = true;
        }
        try {
            orc = lambda_oracle(pt, oo);
            orr = orc->real();
            oi = orc->imag();
        } catch (const std::exception& e) {
            status = (status.empty() ? "" : status + "; ") + "oracle failed: " + e.what();
            res.flagged = true;
        }
        if (a && orc) err = std::abs(*a - *orc) / std::abs(*orc);
        res.row = {pt.r_tilde, pt.tau, ar, ai, orr, oi, err, region_profile(pt, c.region_thresh), status};
        return res;
    });
    for (auto& r : rows) {
        if (r.flagged) o.code = exit_partial;
        o.tab.rows.push_back(std::move(r.row));
    }
    return o;
}

inline std::vector<double> default_steady_grid() {
    return {0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 5.0, 7.5, 10.0, 15.0, 20.0};
}

inline command_output steady(const run_config& c) {
    validate_common(c);
    const auto r_grid = c.r.empty() ? default_steady_grid() : c.r;
    require_grid(r_grid, "r");
    for (double r : r_grid)
        if (!(r > 0.0)) fail(errc::config, "config: r values must be > 0");
    const auto p = c.gas();

    command_output o;
    add_run_meta(o.tab, c, "steady");
    o.tab.columns = {"r", "g0", "g0_quadrature", "rel_gap", "status"};
    struct result {
        std::vector<cell> row;
        bool flagged = false;
    };
    auto rows = parallel_map<result>(r_grid.size(), c.threads, [&](std::size_t i) {
        const double r = r_grid[i];
        result res;
        cell a, b, gap;
        std::string status;
        try {
            const double va = steady_g0_r(r, p);
            const double vb = steady_g0_r_quadrature(r, p);
            a = va;
            b = vb;
            gap = std::abs(va - vb) / std::abs(vb);
        } catch (const std::exception& e) {
            status = e.what();
            res.flagged = true;
        }
        res.row = {r, a, b, gap, status};
        return res;
    });
    for (auto& r : rows) {
        if (r.flagged) o.code = exit_partial;
        o.tab.rows.push_back(std::move(r.row));
    }
    return o;
}

inline command_output poles(const run_config& c) {
    validate_common(c);
    const auto t_grid = c.t.empty() ? std::vector<double>{10.0} : c.t;
    require_grid(t_grid, "t");
    for (double t : t_grid)
        if (!(t > 0.0)) fail(errc::config, "config: t values must be > 0");
    std::vector<int> ms = c.m;
    if (ms.empty())
        for (int m = -8; m <= 8; ++m)
            if (m) ms.push_back(m);
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (ms[i] == 0) fail(errc::config, "config: m = 0 is not a pole index");
        if (i && ms[i] <= ms[i - 1]) fail(errc::config, "config: m values must be strictly increasing");
    }

    command_output o;
    o.tab.add_meta("command", "poles");
    o.tab.add_meta("units", "hbar = 2m = 1, 16 pi a rho0 = 1");
    o.tab.columns = {"t", "m", "eta_est_re", "eta_est_im", "eta_re", "eta_im", "k_re", "k_im", "residual", "quadrant", "status"};
    std::vector<std::pair<double, int>> jobs;
    for (double t : t_grid)
        for (int m : ms) jobs.emplace_back(t, m);
    auto recs = parallel_map<pole_record>(jobs.size(), c.threads, [&](std::size_t i) { return refine_pole(jobs[i].second, jobs[i].first); });
    for (std::size_t i = 0; i < recs.size(); ++i) {
        const auto& r = recs[i];
        if (!r.converged) o.code = exit_partial;
        static const char* quad[] = {"axis", "I", "II", "III", "IV"};
        o.tab.rows.push_back({jobs[i].first, (long long)r.m, r.estimate.real(), r.estimate.imag(), r.eta.real(), r.eta.imag(),
                              r.k.real(), r.k.imag(), r.residual, std::string(quad[r.quadrant()]), r.converged ? std::string() : r.message});
    }
    return o;
}

inline trap_model make_trap(const run_config& c) {
    const auto p = c.gas();
    if (c.trap.kind == "quadratic") return trap_model::quadratic(c.trap.epsilon, c.trap.volume, p);
    if (c.trap.kind == "constant") return trap_model::constant(c.trap.value, c.trap.volume, p);
    fail(errc::config, "config: trap kind must be quadratic or constant");
}

inline command_output trap_profile(const run_config& c) {
    validate_common(c);
    if (!(c.trap.margin >= 0.0 && c.trap.margin < 1.0)) fail(errc::config, "config: trap margin must lie in [0, 1)");
    tf_solution tf;
    try {
        tf = solve_tf(make_trap(c), std::min(c.tol, 1e-10));
    } catch (const error& e) {
        if (e.code() == errc::infeasible || e.code() == errc::config) fail(errc::infeasible, e.what());
        throw;
    }
    std::vector<double> R_grid = c.R;
    if (R_grid.empty())
        for (int i = 0; i <= 20; ++i) R_grid.push_back(tf.model.ball_radius() * i / 20.0);
    require_grid(R_grid, "R");
    for (double x : R_grid)
        if (!(x >= 0.0)) fail(errc::config, "config: R values must be >= 0");
    const bool with_lambda = !c.r.empty() || !c.t.empty();
    if (with_lambda) {
        require_grid(c.r, "r");
        require_grid(c.t, "t");
        for (double t : c.t)
            if (!(t > 0.0)) fail(errc::config, "config: t values must be > 0");
        for (double r : c.r)
            if (!(r > 0.0)) fail(errc::config, "config: r values must be > 0");
    }

    command_output o;
    add_run_meta(o.tab, c, "trap-profile");
    o.tab.add_meta("trap", tf.model.kind);
    o.tab.add_meta("epsilon", tf.model.epsilon);
    o.tab.add_meta("volume", tf.model.volume);
    o.tab.add_meta("E", tf.E);
    o.tab.add_meta("zeta", tf.zeta);
    o.tab.add_meta("zeta_e", tf.zeta_e);
    o.tab.add_meta("edge_energy", tf.mu);
    o.tab.add_meta("edge_radius", tf.edge_radius);
    o.tab.add_meta("margin", c.trap.margin);
    o.tab.columns = {"R", "phi0", "in_region", "r_tilde_scale", "tau_scale", "r", "t", "lambda_slow_re", "lambda_slow_im", "status"};

    struct job {
        double R;
        std::optional<double> r, t;
    };
    std::vector<job> jobs;
    for (double x : R_grid) {
        if (!with_lambda) {
            jobs.push_back({x, {}, {}});
            continue;
        }
        for (double r : c.r)
            for (double t : c.t) jobs.push_back({x, r, t});
    }
    slow_options so;
    so.margin = c.trap.margin;
    so.asym.c_thresh = c.region_thresh;
    struct result {
        std::vector<cell> row;
        bool flagged = false;
    };
    auto rows = parallel_map<result>(jobs.size(), c.threads, [&](std::size_t i) {
        const auto& j = jobs[i];
        const position R{j.R, 0.0, 0.0};
        const bool inside = tf.in_region(R);
        const double g_loc = tf.local_params(R).g();
        result res;
        cell r_cell, t_cell, lre, lim;
        std::string status;
        if (j.r) {
            r_cell = *j.r;
            t_cell = *j.t;
            if (!inside) {
                status = "outside condensate region";
            } else {
                try {
                    const cplx v = lambda_slow(R, *j.r, *j.t, tf, so);
                    lre = v.real();
                    lim = v.imag();
                } catch (const error& e) {
                    status = e.what();
                    if (e.code() != errc::region) res.flagged = true;
                } catch (const std::exception& e) {
                    status = e.what();
                    res.flagged = true;
                }
            }
        }
        res.row = {j.R, tf.phi0(R), inside, inside ? cell{std::sqrt(g_loc)} : cell{}, inside ? cell{g_loc} : cell{},
                   r_cell, t_cell, lre, lim, status};
        return res;
    });
    for (auto& r : rows) {
        if (r.flagged) o.code = exit_partial;
        o.tab.rows.push_back(std::move(r.row));
    }
    return o;
}

// Writes to c.out or stdout.
inline void emit(const command_output& o, const run_config& c) {
    if (c.out.empty()) {
        write_table(std::cout, o.tab, c.format);
        std::cout.flush();
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) fail(errc::config, "cannot open output file " + c.out);
    write_table(f, o.tab, c.format);
}

}  // namespace pairwave::cli
