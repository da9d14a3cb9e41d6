#pragma once

// Translationally invariant gas: exact Fourier-space evolution of the pair kernel, the Riccati
// ODE it solves, the steady state g0(r), and the brute-force quadrature for Λ(r̃, τ).

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/ooura_fourier_integrals.hpp>
#include <boost/numeric/odeint.hpp>

#include "pairwave/complex.hpp"
#include "pairwave/error.hpp"
#include "pairwave/specfun/lommel.hpp"

namespace pairwave {

// Scattering length a and density ρ0 in units ħ = 2m = 1.
struct gas_params {
    double a = 1.0 / (16.0 * std::numbers::pi);
    double rho0 = 1.0;

    double g() const { return 16.0 * std::numbers::pi * a * rho0; }
    double four_pi_a_rho() const { return 4.0 * std::numbers::pi * a * rho0; }
    double eight_pi_a_rho() const { return 8.0 * std::numbers::pi * a * rho0; }

    void validate() const {
        if (!(a > 0.0) || !std::isfinite(a)) fail(errc::domain, "gas_params: scattering length must be positive");
        if (!(rho0 > 0.0) || !std::isfinite(rho0)) fail(errc::domain, "gas_params: density must be positive");
    }

    // Parameters with 16πaρ0 = g at unit density.
    static gas_params with_coupling(double g) {
        gas_params p;
        p.a = g / (16.0 * std::numbers::pi);
        p.rho0 = 1.0;
        p.validate();
        return p;
    }
};

// Radial initial data f0(r) together with its 3D Fourier transform.
struct initial_data {
    std::function<double(double)> f0;
    std::function<double(double)> f0hat;
    bool zero_flag = false;

    double transform(double k) const { return zero_flag ? 0.0 : f0hat(k); }
    double value(double r) const {
        if (zero_flag) return 0.0;
        if (!f0) fail(errc::data, "initial_data: position-space profile not provided");
        return f0(r);
    }

    static initial_data zero() {
        return {[](double) { return 0.0; }, [](double) { return 0.0; }, true};
    }

    // f0(r) = A e^{-r²/(2σ²)}, f0hat(k) = A (2πσ²)^{3/2} e^{-k²σ²/2}.
    static initial_data gaussian(double amplitude, double sigma) {
        if (!(sigma > 0.0)) fail(errc::data, "initial_data: gaussian width must be positive");
        const double norm = amplitude * std::pow(2.0 * std::numbers::pi * sigma * sigma, 1.5);
        return {[=](double r) { return amplitude * std::exp(-r * r / (2.0 * sigma * sigma)); },
                [=](double k) { return norm * std::exp(-0.5 * k * k * sigma * sigma); }, amplitude == 0.0};
    }

    // Data known only through its transform.
    static initial_data from_transform(std::function<double(double)> fhat) {
        return {nullptr, std::move(fhat), false};
    }
};

// Non-dimensional distance r̃ = √(16πaρ0) r and time τ = 16πaρ0 t.
struct scaled_point {
    double r_tilde = 0.0;
    double tau = 1.0;

    void validate() const {
        if (!(r_tilde >= 0.0) || !std::isfinite(r_tilde)) fail(errc::domain, "scaled_point: r_tilde must be >= 0");
        if (!(tau > 0.0) || !std::isfinite(tau)) fail(errc::domain, "scaled_point: tau must be > 0");
    }

    static scaled_point from_physical(double r, double t, const gas_params& p) {
        const double g = p.g();
        return {std::sqrt(g) * r, g * t};
    }
};

struct spectral_state {
    double k = 0.0;
    double g0hat = -1.0;
    double omega = 0.0;
    double p0 = -1.0;
};

namespace detail {
inline void check_wavenumber(double k, const char* who) {
    if (!(k >= 0.0) || !std::isfinite(k)) fail(errc::domain, std::string(who) + ": wavenumber must be >= 0");
}
}  // namespace detail

// ĝ0(k) = -(k² + 8πaρ0 - k√(k² + 16πaρ0))/(8πaρ0), evaluated as -A/(k² + A + k√(k² + 2A)).
inline double g0_hat(double k, const gas_params& p) {
    detail::check_wavenumber(k, "g0_hat");
    const double A = p.eight_pi_a_rho();
    return -A / (k * k + A + k * std::sqrt(k * k + 2.0 * A));
}

inline double omega(double k, const gas_params& p) {
    detail::check_wavenumber(k, "omega");
    return k * std::sqrt(k * k + p.g());
}

inline double p0_hat(double k, const initial_data& init, const gas_params& p) {
    const double g0 = g0_hat(k, p);
    const double f = init.transform(k);
    const double den = 1.0 - g0 * f;
    if (std::abs(den) < 1e-14) fail(errc::singularity, "p0_hat: 1 - g0hat*f0hat vanishes");
    return (g0 - f) / den;
}

inline spectral_state spectral(double k, const initial_data& init, const gas_params& p) {
    return {k, g0_hat(k, p), omega(k, p), p0_hat(k, init, p)};
}

// K̂(k, t) = ĝ0 - (1 - ĝ0²) p0 e^{-2iωt} / (1 - ĝ0 p0 e^{-2iωt}).
inline cplx khat_exact(double k, double t, const initial_data& init, const gas_params& p) {
    if (!(t >= 0.0)) fail(errc::domain, "khat_exact: t must be >= 0");
    const spectral_state s = spectral(k, init, p);
    const cplx e = std::polar(1.0, -2.0 * s.omega * t);
    const cplx den = 1.0 - s.g0hat * s.p0 * e;
    if (std::abs(den) < 1e-12) fail(errc::singularity, "khat_exact: denominator vanishes");
    return s.g0hat - (1.0 - s.g0hat * s.g0hat) * s.p0 * e / den;
}

// Closed form in the variable α = k/√(8πaρ0) and time t' = 8πaρ0 t:
//   z = s - 1 - α² + 2s C e^{-2ist'}/(1 - C e^{-2ist'}),  s = α√(2 + α²),
//   C = (z0 + 1 + α² - s)/(z0 + 1 + α² + s).
inline cplx riccati_closed_alpha(double k, double t, cplx z0, const gas_params& p) {
    detail::check_wavenumber(k, "riccati_closed_alpha");
    const double A = p.eight_pi_a_rho();
    const double alpha = k / std::sqrt(A);
    const double s = alpha * std::sqrt(2.0 + alpha * alpha);
    const double base = 1.0 + alpha * alpha;
    const cplx C = (z0 + base - s) / (z0 + base + s);
    const cplx e = C * std::polar(1.0, -2.0 * s * A * t);
    return s - base + 2.0 * s * e / (1.0 - e);
}

// Integrates i ż = A z² + 2(k² + A) z + A, A = 8πaρ0, with an adaptive Dormand–Prince pair.
inline cplx riccati_numeric(double k, double t_end, cplx z0, const gas_params& p, double tol) {
    detail::check_wavenumber(k, "riccati_numeric");
    if (!(t_end >= 0.0)) fail(errc::domain, "riccati_numeric: t_end must be >= 0");
    if (!(tol > 0.0)) fail(errc::domain, "riccati_numeric: tol must be > 0");
    using state = std::array<double, 2>;
    namespace ode = boost::numeric::odeint;

    const double A = p.eight_pi_a_rho();
    const double B = 2.0 * (k * k + A);
    auto rhs = [A, B](const state& x, state& dx, double) {
        const cplx z{x[0], x[1]};
        const cplx dz = cplx{0.0, -1.0} * (A * z * z + B * z + A);
        dx = {dz.real(), dz.imag()};
    };

    auto stepper = ode::make_controlled<ode::runge_kutta_dopri5<state>>(tol, tol);
    state x{z0.real(), z0.imag()};
    double t = 0.0;
    double dt = std::min(1e-3, t_end > 0 ? t_end : 1e-3);
    const double dt_floor = 1e-14 * std::max(1.0, t_end);
    while (t < t_end) {
        if (t + dt > t_end) dt = t_end - t;
        if (stepper.try_step(rhs, x, t, dt) == ode::fail) {
            if (dt < dt_floor) fail(errc::stiffness, "riccati_numeric: step size collapsed");
        }
    }
    return {x[0], x[1]};
}

// g0(r) = -π⁻² (4πaρ0)^{3/2} χ⁻¹ Im[S_{0,4}(iχ) - S_{0,0}(iχ)],  χ = √(16πaρ0) r.
inline double steady_g0_r(double r, const gas_params& p) {
    if (!(r > 0.0) || !std::isfinite(r)) fail(errc::domain, "steady_g0_r: r must be > 0");
    const double chi = std::sqrt(p.g()) * r;
    const cplx ichi{0.0, chi};
    const cplx diff = lommel_S(lommel_order::s04(), ichi) - lommel_S(lommel_order::s00(), ichi);
    const double pi = std::numbers::pi;
    return -std::pow(p.four_pi_a_rho(), 1.5) / (pi * pi * chi) * diff.imag();
}

// Oracle: (1/(2π²r)) ∫ k sin(kr) ĝ0(k) dk. The k⁻² tail -A/(2(k²+g)) is integrated in closed form
// and the O(k⁻³) remainder by double-exponential Fourier quadrature.
inline double steady_g0_r_quadrature(double r, const gas_params& p) {
    if (!(r > 0.0)) fail(errc::domain, "steady_g0_r_quadrature: r must be > 0");
    const double A = p.eight_pi_a_rho();
    const double g = p.g();
    const double pi = std::numbers::pi;
    auto f = [&](double k) { return k * (g0_hat(k, p) + 0.5 * A / (k * k + g)); };
    boost::math::quadrature::ooura_fourier_sin<double> ooura(1e-12);
    const auto [integral, rel] = ooura.integrate(f, r);
    if (!(rel < 1e-8)) fail(errc::accuracy, "steady_g0_r_quadrature: Fourier quadrature did not converge");
    return (integral - 0.25 * pi * A * std::exp(-std::sqrt(g) * r)) / (2.0 * pi * pi * r);
}

struct oracle_options {
    double contour_angle = 0.1;
    double tol = 1e-8;
};

namespace detail {

// log(e^w - 1) for Re w > 0 without overflow.
inline cplx log_expm1(cplx w) {
    if (w.real() > 30.0) return w + std::log(1.0 - std::exp(-w));
    const double a = w.real(), b = w.imag();
    const double sb2 = std::sin(0.5 * b);
    const cplx em1{std::expm1(a) * std::cos(b) - 2.0 * sb2 * sb2, std::exp(a) * std::sin(b)};
    return std::log(em1);
}

// log sin(u) for complex u, stable when |Im u| is large.
inline cplx log_sin(cplx u) {
    const cplx i{0.0, 1.0};
    if (std::abs(u.imag()) < 20.0) return std::log(std::sin(u));
    if (u.imag() > 0.0) return -i * u - std::log(-2.0 * i) + std::log(1.0 - std::exp(2.0 * i * u));
    return i * u - std::log(2.0 * i) + std::log(1.0 - std::exp(-2.0 * i * u));
}

// log sinh(v), Re v > 0.
inline cplx log_sinh(cplx v) {
    if (v.real() < 20.0) return std::log(std::sinh(v));
    return v - std::log(2.0) + std::log(1.0 - std::exp(-2.0 * v));
}

// Integrand of Λ along η = s e^{-iθ}, including the Jacobian e^{-iθ}:
//   sinh²(2η) sin(r̃ sinh η) q/(1 - q),  q = e^{-4η - iτ sinh 2η}.
// For r̃ = 0 the factor sin(r̃ sinh η)/r̃ is replaced by its limit sinh η (the caller skips the 1/r̃).
struct lambda_integrand {
    double r_tilde, tau;
    cplx ph;

    cplx operator()(double s) const {
        if (s <= 0.0) return {0.0, 0.0};
        const cplx eta = s * ph;
        const cplx sh2 = std::sinh(2.0 * eta);
        const cplx w = 4.0 * eta + cplx{0.0, tau} * sh2;  // q = e^{-w}
        cplx lg = 2.0 * log_sinh(2.0 * eta) - log_expm1(w);
        if (r_tilde > 0.0) lg += log_sin(r_tilde * std::sinh(eta));
        else lg += log_sinh(eta);
        if (lg.real() < -700.0) return {0.0, 0.0};
        return std::exp(lg) * ph;
    }
};

}  // namespace detail

// Λ(r̃, τ) = (1/(2π²r̃)) ∫₀^∞ sinh²(2η) sin(r̃ sinh η) q/(1-q) dη by adaptive Gauss–Kronrod panels
// along the ray η = s e^{-iθ}. Λ is complex; its real part carries the O(τ⁻⁴) law.
inline cplx lambda_oracle(const scaled_point& pt, const oracle_options& opt = {}) {
    pt.validate();
    const double theta = opt.contour_angle;
    if (!(theta > 0.0 && theta <= 0.3)) fail(errc::domain, "lambda_oracle: contour angle must lie in (0, 0.3]");
    if (!(opt.tol > 0.0)) fail(errc::domain, "lambda_oracle: tol must be > 0");

    const detail::lambda_integrand f{pt.r_tilde, pt.tau, std::polar(1.0, -theta)};

    // Past s = π/(2 sin θ) the τ-damping turns into growth; stay well inside.
    const double s_cap = std::min(12.0, 0.9 * std::numbers::pi / (2.0 * std::sin(theta)));
    const double scan_h = 1e-3;
    double peak = 0.0;
    std::vector<double> mags;
    for (double s = scan_h; s <= s_cap; s += scan_h) {
        const double m = std::abs(f(s));
        mags.push_back(m);
        peak = std::max(peak, m);
    }
    if (!(peak > 0.0) || !std::isfinite(peak)) fail(errc::accuracy, "lambda_oracle: integrand vanishes or overflows");
    const double cutoff = opt.tol * 1e-3 * peak;
    std::size_t last = 0;
    for (std::size_t j = 0; j < mags.size(); ++j)
        if (mags[j] >= cutoff) last = j;
    if (last + 1 >= mags.size()) fail(errc::accuracy, "lambda_oracle: integrand not negligible at the truncation cap");
    const double s_max = std::min(s_cap, (last + 1) * scan_h + 0.05);

    // Panels resolve the local oscillation 2τ cosh 2s + r̃ cosh s; panels whose Kronrod error
    // exceeds their share of the global target are bisected.
    using gk = boost::math::quadrature::gauss_kronrod<double, 31>;
    std::vector<std::pair<double, double>> panels;
    for (double a = 0.0; a < s_max;) {
        const double freq = 2.0 * pt.tau * std::cosh(2.0 * a) + pt.r_tilde * std::cosh(a) + 1.0;
        const double b = std::min(s_max, a + std::min(0.02, 2.0 / freq));
        panels.emplace_back(a, b);
        a = b;
    }
    std::vector<cplx> vals(panels.size());
    std::vector<double> errs(panels.size());
    cplx sum{0.0, 0.0};
    for (std::size_t j = 0; j < panels.size(); ++j) {
        vals[j] = gk::integrate(f, panels[j].first, panels[j].second, 0, 0.0, &errs[j]);
        sum += vals[j];
    }
    const double target = opt.tol * std::abs(sum) / double(panels.size());
    std::function<cplx(double, double, cplx, double, int, double&)> refine =
        [&](double a, double b, cplx whole, double err, int depth, double& err_out) -> cplx {
        if (err <= target || depth >= 12) {
            err_out = err;
            return whole;
        }
        const double m = 0.5 * (a + b);
        double el = 0.0, er = 0.0;
        const cplx l = gk::integrate(f, a, m, 0, 0.0, &el);
        const cplx r = gk::integrate(f, m, b, 0, 0.0, &er);
        double e1 = 0.0, e2 = 0.0;
        const cplx out = refine(a, m, l, el, depth + 1, e1) + refine(m, b, r, er, depth + 1, e2);
        if (e1 + e2 >= err) {
            err_out = err;
            return whole;
        }
        err_out = e1 + e2;
        return out;
    };
    sum = {0.0, 0.0};
    double err_sum = 0.0;
    for (std::size_t j = 0; j < panels.size(); ++j) {
        double e = 0.0;
        sum += refine(panels[j].first, panels[j].second, vals[j], errs[j], 0, e);
        err_sum += e;
    }

    const double pi = std::numbers::pi;
    const double scale = pt.r_tilde > 0.0 ? 1.0 / (2.0 * pi * pi * pt.r_tilde) : 1.0 / (2.0 * pi * pi);
    const cplx value = sum * scale;
    const double roundoff = peak * s_max * 1e-15;
    if (err_sum > opt.tol * std::abs(sum) || roundoff > opt.tol * std::abs(sum))
        fail(errc::accuracy, "lambda_oracle: cancellation or quadrature error exceeds tolerance");
    return value;
}

// 𝒦(r, t) = g0(r) + (16πaρ0)^{3/2} Λ(r̃, τ).
inline cplx kernel_r(double r, double t, const gas_params& p, const oracle_options& opt = {}) {
    if (!(r > 0.0)) fail(errc::domain, "kernel_r: r must be > 0");
    if (!(t > 0.0)) fail(errc::domain, "kernel_r: t must be > 0");
    const scaled_point pt = scaled_point::from_physical(r, t, p);
    return steady_g0_r(r, p) + std::pow(p.g(), 1.5) * lambda_oracle(pt, opt);
}

}  // namespace pairwave
