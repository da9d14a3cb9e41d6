#pragma once

// Slowly varying isotropic trap: Thomas-Fermi condensate profile, the locally rescaled pair kernel
// inside the condensate region and free diffusion of the initial data outside it.

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

#include "pairwave/asymptotics.hpp"
#include "pairwave/complex.hpp"
#include "pairwave/error.hpp"
#include "pairwave/homogeneous.hpp"

namespace pairwave {

using position = std::array<double, 3>;

inline double radius_of(const position& x) { return std::hypot(x[0], x[1], x[2]); }

// Ve(x) = Ṽe(ε|x|) inside a ball of volume Ω. The potential must be nondecreasing in |x|.
struct trap_model {
    std::function<double(double)> potential;  // radius ↦ energy
    double epsilon = 0.0;
    double volume = 0.0;
    gas_params params;
    std::string kind = "custom";

    double ball_radius() const { return std::cbrt(3.0 * volume / (4.0 * std::numbers::pi)); }

    void validate() const {
        params.validate();
        if (!potential) fail(errc::config, "trap_model: potential not provided");
        if (!(volume > 0.0) || !std::isfinite(volume)) fail(errc::infeasible, "trap_model: volume must be positive");
        if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) fail(errc::config, "trap_model: epsilon must be >= 0");
    }

    static trap_model constant(double value, double volume, const gas_params& p) {
        return {[value](double) { return value; }, 0.0, volume, p, "constant"};
    }

    // Ve = ε²|x|²
    static trap_model quadratic(double epsilon, double volume, const gas_params& p) {
        return {[epsilon](double x) { return epsilon * epsilon * x * x; }, epsilon, volume, p, "quadratic"};
    }
};

struct tf_solution {
    trap_model model;
    double E = 0.0;
    double zeta = 0.0;
    double zeta_e = 0.0;
    double mu = 0.0;           // 4πaρ0ζ + E, the edge of ℛ in energy
    double edge_radius = 0.0;  // radius of ℛ, capped at the ball radius
    double tol = 0.0;

    bool in_region(double x) const { return x <= model.ball_radius() && model.potential(x) < mu; }
    bool in_region(const position& R) const { return in_region(radius_of(R)); }

    double phi0_sq(double x) const {
        if (!in_region(x)) return 0.0;
        return (mu - model.potential(x)) / model.params.eight_pi_a_rho();
    }
    double phi0(double x) const { return std::sqrt(phi0_sq(x)); }
    double phi0(const position& R) const { return phi0(radius_of(R)); }
    double phi0_sq_max() const { return phi0_sq(0.0); }

    // Eq. (88) residual [Ve + 8πaρ0 φ0² - μ] φ0.
    double residual(double x) const {
        const double f = phi0(x);
        return (model.potential(x) + model.params.eight_pi_a_rho() * f * f - mu) * f;
    }

    gas_params local_params(const position& R) const {
        gas_params p = model.params;
        p.rho0 *= phi0_sq(radius_of(R));
        return p;
    }
};

namespace detail {

template <class F>
double radial_integral(F&& f, double upper, double tol) {
    if (!(upper > 0.0)) return 0.0;
    double err = 0.0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        [&](double x) { return 4.0 * std::numbers::pi * x * x * f(x); }, 0.0, upper, 15, tol, &err);
    return v;
}

// Radius where Ve reaches μ, or the ball radius if it never does.
inline double edge_radius(const trap_model& m, double mu) {
    const double rb = m.ball_radius();
    if (m.potential(rb) < mu) return rb;
    if (!(m.potential(0.0) < mu)) return 0.0;
    std::uintmax_t iters = 200;
    auto [lo, hi] = boost::math::tools::toms748_solve([&](double x) { return m.potential(x) - mu; }, 0.0, rb,
                                                      boost::math::tools::eps_tolerance<double>(), iters);
    return 0.5 * (lo + hi);
}

}  // namespace detail

// Solves for μ = 4πaρ0ζ + E from the normalization Ω⁻¹∫φ0² = 1, then ζ, ζ_e and E = 4πaρ0ζ + ζ_e.
inline tf_solution solve_tf(const trap_model& model, double tol = 1e-12) {
    model.validate();
    if (!(tol > 0.0)) fail(errc::domain, "solve_tf: tol must be > 0");
    const double c8 = model.params.eight_pi_a_rho();
    const double quad_tol = std::min(1e-13, tol * 1e-2);
    const double v0 = model.potential(0.0);
    const double rb = model.ball_radius();
    if (!std::isfinite(v0) || !std::isfinite(model.potential(rb))) fail(errc::infeasible, "solve_tf: potential is not finite on the ball");
    for (double x : {0.25 * rb, 0.5 * rb, 0.75 * rb, rb})
        if (model.potential(x) < v0) fail(errc::config, "solve_tf: potential must be nondecreasing in |x|");

    auto norm = [&](double mu) {
        const double edge = detail::edge_radius(model, mu);
        return detail::radial_integral([&](double x) { return (mu - model.potential(x)) / c8; }, edge, quad_tol) / model.volume - 1.0;
    };

    // Bracket μ: the normalization integral grows without bound in μ.
    double lo = v0;
    double step = std::max(c8, std::abs(v0) * 1e-3 + 1e-300);
    double hi = v0 + step;
    int grow = 0;
    while (norm(hi) < 0.0) {
        lo = hi;
        step *= 2.0;
        hi = v0 + step;
        if (++grow > 200 || !std::isfinite(hi)) fail(errc::infeasible, "solve_tf: no chemical potential normalizes the profile");
    }
    std::uintmax_t iters = 200;
    const int bits = std::max(10, int(-std::log2(tol * 1e-3)));
    auto [a, b] = boost::math::tools::toms748_solve(norm, lo, hi, boost::math::tools::eps_tolerance<double>(std::min(bits, 52)), iters);
    if (iters >= 200) fail(errc::solver, "solve_tf: root iteration did not converge");

    tf_solution s;
    s.model = model;
    s.tol = tol;
    s.mu = 0.5 * (a + b);
    s.edge_radius = detail::edge_radius(model, s.mu);
    if (!(s.edge_radius > 0.0)) fail(errc::infeasible, "solve_tf: condensate region is empty");
    const double edge = s.edge_radius;
    s.zeta = detail::radial_integral([&](double x) { double f = (s.mu - model.potential(x)) / c8; return f * f; }, edge, quad_tol) / model.volume;
    s.zeta_e = detail::radial_integral([&](double x) { return model.potential(x) * (s.mu - model.potential(x)) / c8; }, edge, quad_tol) / model.volume;
    s.E = s.mu - model.params.four_pi_a_rho() * s.zeta;
    return s;
}

// Invariant residuals of an accepted solve: normalization, E-relation, edge value of φ0².
struct tf_check {
    double normalization = 0.0;
    double energy_relation = 0.0;
    double edge_value = 0.0;
};

inline tf_check check_tf(const tf_solution& s) {
    const double c8 = s.model.params.eight_pi_a_rho();
    tf_check c;
    const double n = detail::radial_integral([&](double x) { return s.phi0_sq(x); }, s.edge_radius, 1e-13) / s.model.volume;
    c.normalization = std::abs(n - 1.0);
    c.energy_relation = std::abs(s.E - (s.model.params.four_pi_a_rho() * s.zeta + s.zeta_e));
    if (s.edge_radius < s.model.ball_radius()) c.edge_value = std::abs(s.mu - s.model.potential(s.edge_radius)) / c8;
    return c;
}

inline constexpr double default_boundary_margin = 0.05;

inline void check_interior(const position& R, const tf_solution& tf, double margin, const char* who) {
    const double x = radius_of(R);
    if (!tf.in_region(x)) fail(errc::region, std::string(who) + ": R lies outside the condensate region");
    if (tf.phi0_sq(x) < margin * tf.phi0_sq_max())
        fail(errc::region, std::string(who) + ": R is too close to the condensate boundary");
}

// r̃ = [16πaρ0 φ0(R)²]^{1/2} r, τ = 16πaρ0 φ0(R)² t.
inline scaled_point local_scaling(const position& R, double r, double t, const tf_solution& tf,
                                  double margin = default_boundary_margin) {
    check_interior(R, tf, margin, "local_scaling");
    if (!(r >= 0.0) || !(t > 0.0)) fail(errc::domain, "local_scaling: need r >= 0 and t > 0");
    const double g = tf.local_params(R).g();
    return {std::sqrt(g) * r, g * t};
}

inline cplx khat_slow(const position& R, double k, double t, const initial_data& init, const tf_solution& tf) {
    if (!tf.in_region(R)) fail(errc::region, "khat_slow: R lies outside the condensate region");
    return khat_exact(k, t, init, tf.local_params(R));
}

// Outside ℛ the kernel diffuses freely:
// 𝒦0(r, t) = (8πt)^{-3/2} ∫ d³r' f(r') exp(-|r - r'|²/(8t)), reduced to one radial integral.
inline double exterior_kernel(const position& R, double r, double t, const initial_data& init, const tf_solution& tf) {
    if (tf.in_region(R)) fail(errc::region, "exterior_kernel: R lies inside the condensate region");
    if (!(t > 0.0)) fail(errc::domain, "exterior_kernel: t must be > 0");
    if (!(r >= 0.0)) fail(errc::domain, "exterior_kernel: r must be >= 0");
    if (init.zero_flag) return 0.0;
    const double w = 8.0 * t;
    const double pref = 1.0 / std::pow(std::numbers::pi * w, 1.5);
    auto kern = [&](double s) {
        const double f = init.value(s);
        if (!std::isfinite(f)) fail(errc::data, "exterior_kernel: initial data is not finite");
        if (r == 0.0) return 4.0 * std::numbers::pi * s * s * f * std::exp(-s * s / w);
        // 2π s²/(r s) (w/2) [e^{-(r-s)²/w} - e^{-(r+s)²/w}]
        const double d = std::exp(-(r - s) * (r - s) / w) * -std::expm1(-4.0 * r * s / w);
        return std::numbers::pi * s * w / r * f * d;
    };
    double err = 0.0, l1 = 0.0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        kern, 0.0, std::numeric_limits<double>::infinity(), 20, 1e-13, &err, &l1);
    if (!std::isfinite(v) || err > 1e-8 * std::max(l1, 1e-300)) fail(errc::data, "exterior_kernel: initial data is not integrable");
    return pref * v;
}

// (8πt)^{-3/2} e^{-r²/(8t)} ∫ f, valid for t ≫ L² and r ≳ √t.
inline double exterior_similarity(double r, double t, const initial_data& init) {
    if (!(t > 0.0)) fail(errc::domain, "exterior_similarity: t must be > 0");
    if (init.zero_flag) return 0.0;
    const double mass = init.transform(0.0);
    return mass * std::exp(-r * r / (8.0 * t)) / std::pow(8.0 * std::numbers::pi * t, 1.5);
}

enum class slow_method { asymptotic, oracle };

struct slow_options {
    slow_method method = slow_method::asymptotic;
    double margin = default_boundary_margin;
    asymptotic_options asym;
    oracle_options oracle;
};

// Λ(R, r, t) for zero initial data, evaluated at the locally rescaled point.
inline cplx lambda_slow(const position& R, double r, double t, const tf_solution& tf, const slow_options& opt = {}) {
    const scaled_point pt = local_scaling(R, r, t, tf, opt.margin);
    return opt.method == slow_method::oracle ? lambda_oracle(pt, opt.oracle) : lambda_asymptotic(pt, opt.asym);
}

}  // namespace pairwave
