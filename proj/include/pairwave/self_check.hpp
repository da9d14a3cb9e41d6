#pragma once

// The ten acceptance checks, shared by the acceptance binary and `pairwave self-check`.
// Each check returns pass/fail, the measured figure of merit and its wall time against a budget.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "pairwave/asymptotics.hpp"
#include "pairwave/detail/sheet_series.hpp"
#include "pairwave/homogeneous.hpp"
#include "pairwave/poles.hpp"
#include "pairwave/specfun.hpp"
#include "pairwave/trap.hpp"

namespace pairwave {

struct check_result {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
    double budget = 0.0;
};

namespace checks {

inline std::string fmt(const char* f, double a) {
    char buf[96];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

inline double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

struct verdict {
    bool pass;
    std::string detail;
};

inline verdict small_r_law() {
    const double target = std::pow(std::numbers::pi, 2) / 120.0;
    double worst = 0.0;
    for (double tau : {50.0, 100.0}) {
        const scaled_point pt{1.0, tau};
        const double t4 = std::pow(tau, 4);
        worst = std::max(worst, std::abs(t4 * lambda_oracle(pt).real() - target) / target);
        worst = std::max(worst, std::abs(t4 * lambda_asymptotic(pt).real() - target) / target);
    }
    return {worst <= 0.02, fmt("max |τ⁴ReΛ - π²/120|/(π²/120) = %.3e", worst)};
}

inline std::vector<scaled_point> master_grid() {
    std::vector<scaled_point> g;
    for (double tau : {50.0, 100.0})
        for (double r : {1.0, 10.0, tau / 2, 2 * tau - std::cbrt(tau), 3 * tau}) g.push_back({r, tau});
    return g;
}

inline verdict master_suite() {
    double worst = 0.0;
    int used = 0;
    for (const auto& pt : master_grid()) {
        const cplx o = lambda_oracle(pt);
        if (std::abs(o) < 1e-14) continue;
        ++used;
        worst = std::max(worst, rel(lambda_asymptotic(pt), o));
    }
    return {worst <= 0.05, fmt("max rel error = %.3e", worst) + " over " + std::to_string(used) + " points"};
}

inline verdict closed_vs_ode() {
    const auto p = gas_params::with_coupling(1.0);
    double worst = 0.0;
    for (double f : {0.0, 0.3}) {
        const auto init = f == 0.0 ? initial_data::zero() : initial_data::from_transform([f](double) { return f; });
        for (double k : {0.1, 0.5, 1.0, 2.0, 5.0})
            for (int j = 0; j <= 20; ++j) {
                const double t = 0.5 * j;
                worst = std::max(worst, std::abs(khat_exact(k, t, init, p) - riccati_numeric(k, t, f, p, 1e-10)));
            }
    }
    return {worst < 1e-7, fmt("max |closed - ODE| = %.3e", worst)};
}

inline verdict steady_consistency() {
    const auto p = gas_params::with_coupling(1.0);
    double worst = 0.0;
    for (double r : {0.5, 1.0, 3.0}) {
        const double a = steady_g0_r(r, p), b = steady_g0_r_quadrature(r, p);
        worst = std::max(worst, std::abs(a - b) / std::abs(b));
    }
    return {worst <= 1e-3, fmt("max rel gap = %.3e", worst)};
}

inline std::vector<double> log_grid_01_30() {
    std::vector<double> z;
    for (int i = 0; i < 20; ++i) z.push_back(0.1 * std::pow(300.0, i / 19.0));
    return z;
}

inline verdict continuation_identities() {
    namespace sh = detail::sheet;
    const auto ord = lommel_order::s0third();
    double id_worst = 0.0, ode_worst = 0.0;
    for (double z : log_grid_01_30()) {
        const cplx k = std::sqrt(3.0) * bessel_third(bessel_kind::K, z);
        const cplx s_iz = lommel_S(ord, cplx{0.0, z});
        id_worst = std::max({id_worst, std::abs(sh::lommel_s0third_sheet(z, -1.0) - lommel_S(ord, z, -1)),
                             std::abs(sh::lommel_s0third_sheet(z, 2.0) - lommel_S(ord, z, 2)),
                             std::abs(sh::lommel_s0third_sheet(z, -0.5) - (-s_iz + k)),
                             std::abs(sh::lommel_s0third_sheet(z, 2.5) - (s_iz - k))});
        for (auto o : {lommel_order::s00(), lommel_order::s0third(), lommel_order::s04()})
            ode_worst = std::max(ode_worst, lommel_ode_residual(o, z));
    }
    return {id_worst < 1e-10 && ode_worst < 1e-8,
            fmt("max identity residual = %.3e", id_worst) + fmt(", max ODE residual = %.3e", ode_worst)};
}

inline verdict large_argument_seam() {
    const double x = 40.0;
    const double s = lommel_S(lommel_order::s0third(), x).real();
    const double approx = 1.0 / x - 8.0 / (9.0 * x * x * x);
    const double gap = std::abs(s - approx) / std::abs(s);
    return {gap <= 1e-4, fmt("rel gap at x = 40: %.3e", gap)};
}

inline verdict appendix_b() {
    const double t = 10.0;
    std::vector<int> ms;
    for (int m = -8; m <= 8; ++m)
        if (m != 0) ms.push_back(m);
    double res = 0.0, est = 0.0;
    bool ok = true;
    int estimated = 0;
    for (const auto& r : find_poles(t, ms)) {
        ok = ok && r.converged && (r.quadrant() == (r.m > 0 ? 1 : 3));
        res = std::max(res, r.residual);
        const double mp = std::abs(r.m) * std::numbers::pi;
        if (mp > 10.0 * t || mp < t / 10.0) {
            ++estimated;
            est = std::max(est, rel(r.estimate, r.eta));
        }
    }
    ok = ok && res < 1e-10 && est < 0.01;
    std::string d = fmt("max residual = %.3e", res) + ", quadrants I/III";
    d += estimated == 0 ? ", estimate clause vacuous (no |m|π outside [t/10, 10t])"
                        : fmt(", max estimate gap = %.3e", est);
    return {ok, d};
}

inline verdict trap_suite() {
    const auto p = gas_params::with_coupling(1.0);
    // constant potential reproduces the homogeneous gas
    const auto flat = solve_tf(trap_model::constant(0.3, 1000.0, p));
    double phi_dev = 0.0, lam_dev = 0.0;
    for (double x : {0.0, 2.0, 5.0}) phi_dev = std::max(phi_dev, std::abs(flat.phi0(position{x, 0.0, 0.0}) - 1.0));
    const double pts[3][2] = {{1.0, 100.0}, {50.0, 50.0}, {150.0, 100.0}};
    for (const auto& q : pts) {
        const cplx a = lambda_slow(position{1.0, 0.0, 0.0}, q[0], q[1], flat);
        const cplx b = lambda_asymptotic(scaled_point::from_physical(q[0], q[1], p));
        lam_dev = std::max(lam_dev, rel(a, b));
    }
    // quadratic trap invariants
    const auto tf = solve_tf(trap_model::quadratic(0.05, 1e5, p));
    const auto c = check_tf(tf);
    const double inv = std::max({c.normalization, c.energy_relation, c.edge_value});
    // exterior Gaussian data
    const double sigma = 1.0;
    const auto g = initial_data::gaussian(1.0, sigma);
    const position out{1e3, 0.0, 0.0};
    double conv = 0.0, sim = 0.0;
    for (double t : {0.5, 5.0, 100.0})
        for (double r : {0.0, 1.0, 10.0, 20.0}) {
            const double w = sigma * sigma + 4.0 * t;
            const double exact = std::pow(sigma * sigma / w, 1.5) * std::exp(-r * r / (2.0 * w));
            conv = std::max(conv, std::abs(exterior_kernel(out, r, t, g, tf) - exact) / exact);
            if (t == 100.0) sim = std::max(sim, std::abs(exterior_similarity(r, t, g) - exact) / exact);
        }
    const bool ok = phi_dev <= 4 * std::numeric_limits<double>::epsilon() && lam_dev <= 1e-12 && inv <= 1e-8 &&
                    conv < 1e-8 && sim < 0.02;
    return {ok, fmt("|φ0-1| = %.1e", phi_dev) + fmt(", ΔΛ = %.1e", lam_dev) + fmt(", TF invariants %.1e", inv) +
                    fmt(", convolution %.1e", conv) + fmt(", similarity %.2e", sim)};
}

// Eq. (64) both ways: (γe^{∓3iπ/2})[(iγe^{∓3iπ/2})^{-1} - S(iγe^{∓3iπ/2})], library continuations
// against each other and against the 50-digit sheet series.
inline verdict single_valuedness() {
    namespace sh = detail::sheet;
    const auto ord = lommel_order::s0third();
    const cplx i{0.0, 1.0};
    double lib_gap = 0.0, ref_gap = 0.0;
    for (int j = 0; j < 10; ++j) {
        const double g = 0.2 * std::pow(150.0, j / 9.0);
        const cplx minus = -i - i * g * lommel_S(ord, g, -1);
        const cplx plus = -i + i * g * lommel_S(ord, g, 2);
        const cplx ref_minus = i * g * (1.0 / (-g) - sh::lommel_s0third_sheet(g, -1.0));
        const cplx ref_plus = -i * g * (1.0 / g - sh::lommel_s0third_sheet(g, 2.0));
        const double scale = std::max(1.0, std::abs(minus));
        lib_gap = std::max(lib_gap, std::abs(minus - plus) / scale);
        ref_gap = std::max({ref_gap, std::abs(minus - ref_minus) / scale, std::abs(plus - ref_plus) / scale});
    }
    return {lib_gap < 1e-10 && ref_gap < 1e-10,
            fmt("continuations differ by %.3e", lib_gap) + fmt(", vs 50-digit sheet series %.3e", ref_gap)};
}

inline verdict polygamma_values() {
    const double zeta3 = 1.2020569031595942854;
    const double a = std::abs(polygamma(3, cplx{1.0, 0.0}).real() - std::pow(std::numbers::pi, 4) / 15.0);
    const double b = std::abs(polygamma(2, cplx{1.0, 0.0}).real() + 2.0 * zeta3);
    return {a < 1e-12 && b < 1e-12, fmt("|ψ'''(1) - π⁴/15| = %.1e", a) + fmt(", |ψ''(1) + 2ζ(3)| = %.1e", b)};
}

}  // namespace checks

struct check_spec {
    int id;
    const char* name;
    double budget;
    std::function<checks::verdict()> run;
};

inline std::vector<check_spec> acceptance_checks() {
    return {
        {1, "small-r law", 60.0, checks::small_r_law},
        {2, "oracle vs asymptotics", 600.0, checks::master_suite},
        {3, "closed form vs ODE", 10.0, checks::closed_vs_ode},
        {4, "steady-state consistency", 30.0, checks::steady_consistency},
        {5, "Lommel continuation identities and ODE", 5.0, checks::continuation_identities},
        {6, "large-argument seam", 1.0, checks::large_argument_seam},
        {7, "poles of U(k)", 5.0, checks::appendix_b},
        {8, "trap suite", 60.0, checks::trap_suite},
        {9, "continuation single-valuedness", 1.0, checks::single_valuedness},
        {10, "polygamma values", 1.0, checks::polygamma_values},
    };
}

// An exception inside a check counts as failure; exceeding the time budget also fails.
inline check_result run_check(const check_spec& c) {
    check_result r;
    r.id = c.id;
    r.name = c.name;
    r.budget = c.budget;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const auto v = c.run();
        r.pass = v.pass;
        r.detail = v.detail;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.seconds > c.budget) {
        r.pass = false;
        r.detail += checks::fmt(" (over budget %.0f s)", c.budget);
    }
    return r;
}

inline std::string format_check(const check_result& r) {
    char head[128];
    std::snprintf(head, sizeof head, "%s %2d %s: ", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str());
    char tail[64];
    std::snprintf(tail, sizeof tail, " [%.2f s]", r.seconds);
    return head + r.detail + tail;
}

}  // namespace pairwave
