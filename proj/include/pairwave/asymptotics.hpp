#pragma once

// Large-τ asymptotics of Λ(r̃, τ) for zero initial data. Λ = (1/(2π²r̃)) Σ_l (I_{l,+} - I_{l,-});
// I_{l,-} is endpoint dominated, I_{l,+} is classified into region I (endpoint), II (stationary
// phase) and III (stationary point coalescing with the endpoint, Lommel form).

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "pairwave/complex.hpp"
#include "pairwave/error.hpp"
#include "pairwave/homogeneous.hpp"
#include "pairwave/specfun/bessel.hpp"
#include "pairwave/specfun/lommel.hpp"
#include "pairwave/specfun/polygamma.hpp"

namespace pairwave {

enum class region { I, II, III };

inline const char* region_name(region r) {
    switch (r) {
    case region::I: return "I";
    case region::II: return "II";
    case region::III: return "III";
    }
    return "?";
}

inline constexpr double default_region_thresh = 20.0;

struct phase_data {
    int l = 1;
    double beta = 0.0;        // r̃/(2lτ)
    bool has_eta = false;     // real stationary point exists (β ≥ 1)
    double eta = 0.0;
    double theta = 0.0;       // Θ(η_l)
    double theta_pp = 0.0;    // Θ''(η_l)
    double gamma_abs = 0.0;   // |γ_l|
    cplx gamma_tilde;         // γ̃_l, damped, 2lτ > r̃ side
    cplx gamma_breve;         // γ̆_l, damped, r̃ > 2lτ side
    cplx eta_bar;             // √(η_l² + 4i/(3τ))
    cplx eta_breve;           // stationary point of the damped phase Θ(η) + 4ilη
};

namespace detail {

inline void check_l(int l) {
    if (l < 1) fail(errc::domain, "series index l must be >= 1");
}

// cosh η - 1 and β - cosh η at the real stationary point, free of cancellation near β = 1.
inline double cosh_eta_minus_one(double beta) {
    const double root = std::sqrt(beta * beta + 8.0);
    return 2.0 * (beta - 1.0) / (root + 4.0 - beta);
}
inline double beta_minus_cosh_eta(double beta) {
    return 2.0 * (beta * beta - 1.0) / (3.0 * beta + std::sqrt(beta * beta + 8.0));
}

inline cplx cpow(cplx z, double p) { return std::pow(z, p); }

// (2/3^{3/2}) w^{3/2} / (lτ)^{1/2}
inline cplx gamma_of(cplx w, double ltau) {
    return 2.0 / std::pow(3.0, 1.5) * cpow(w, 1.5) / std::sqrt(ltau);
}

// Complex stationary point of Θ(η) + 4ilη: cosh η̆ = (β + √(β² + 8 + 16i/τ))/4.
struct damped_saddle {
    cplx eta;
    cplx phi;     // Θ(η̆) + 4ilη̆
    cplx phi_pp;  // Θ''(η̆)
};

inline damped_saddle damped_stationary_point(int l, double r_tilde, double tau) {
    const double beta = r_tilde / (2.0 * l * tau);
    const cplx i{0.0, 1.0};
    const cplx D = beta * beta + 8.0 + 16.0 * i / tau;
    const cplx sD = std::sqrt(D);
    const cplx cm1 = (8.0 * beta - 8.0 + 16.0 * i / tau) / (4.0 * (sD + 4.0 - beta));
    const cplx eta = 2.0 * std::asinh(std::sqrt(0.5 * cm1));
    const cplx sh = std::sinh(eta);
    const double ltau = l * tau;
    const cplx phi = 4.0 * ltau * sh * (beta * beta - 1.0 - 2.0 * i / tau) / (3.0 * beta + sD) + 4.0 * i * double(l) * eta;
    const cplx phi_pp = sh * (r_tilde - 8.0 * ltau * std::cosh(eta));
    return {eta, phi, phi_pp};
}

}  // namespace detail

inline phase_data stationary_point(int l, const scaled_point& pt) {
    detail::check_l(l);
    pt.validate();
    phase_data d;
    d.l = l;
    const double ltau = l * pt.tau;
    d.beta = pt.r_tilde / (2.0 * ltau);
    const cplx i{0.0, 1.0};
    d.gamma_abs = 2.0 / std::pow(3.0, 1.5) * std::pow(std::abs(2.0 * ltau - pt.r_tilde), 1.5) / std::sqrt(ltau);
    d.gamma_tilde = detail::gamma_of(cplx{2.0 * ltau - pt.r_tilde, -4.0 * l}, ltau);
    d.gamma_breve = detail::gamma_of(cplx{pt.r_tilde - 2.0 * ltau, 4.0 * l}, ltau);
    d.eta_breve = detail::damped_stationary_point(l, pt.r_tilde, pt.tau).eta;
    if (d.beta >= 1.0) {
        d.has_eta = true;
        const double cm1 = detail::cosh_eta_minus_one(d.beta);
        d.eta = 2.0 * std::asinh(std::sqrt(0.5 * cm1));
        const double sh = std::sinh(d.eta);
        d.theta = 2.0 * ltau * detail::beta_minus_cosh_eta(d.beta) * sh;
        d.theta_pp = (pt.r_tilde - 8.0 * ltau * (1.0 + cm1)) * sh;
    }
    d.eta_bar = std::sqrt(cplx{d.eta * d.eta, 4.0 / (3.0 * pt.tau)});
    return d;
}

inline region classify_region(int l, const scaled_point& pt, double c_thresh = default_region_thresh) {
    detail::check_l(l);
    if (!(c_thresh > 0.0)) fail(errc::domain, "classify_region: c_thresh must be > 0");
    const double ltau = l * pt.tau;
    const double gap = 2.0 * ltau - pt.r_tilde;
    if (std::abs(gap) <= c_thresh * std::cbrt(ltau)) return region::III;
    return gap > 0.0 ? region::I : region::II;
}

// I_{l,-} ≈ 4/(2lτ + r̃)³ and its sum -(1/(4τ³)) ψ''(1 + r̃/(2τ)).
inline double i_minus_term(int l, const scaled_point& pt) {
    detail::check_l(l);
    const double d = 2.0 * l * pt.tau + pt.r_tilde;
    return 4.0 / (d * d * d);
}

inline double i_minus_sum(const scaled_point& pt) {
    pt.validate();
    const double t3 = pt.tau * pt.tau * pt.tau;
    return -polygamma(2, cplx{1.0 + pt.r_tilde / (2.0 * pt.tau), 0.0}).real() / (4.0 * t3);
}

// Σ_l 4/(2lτ + r̃ - 4il)³ = -(2/(2τ - 4i)³) ψ''(1 + r̃/(2τ - 4i)), keeping the e^{-4lη} damping.
inline cplx i_minus_sum_damped(const scaled_point& pt) {
    pt.validate();
    const cplx h{2.0 * pt.tau, -4.0};
    return -2.0 / (h * h * h) * polygamma(2, 1.0 + pt.r_tilde / h);
}

enum class iplus_mode { automatic, region_I, region_II, region_III, connection };

enum class connection_variant {
    complex_saddle,  // Lommel structure built on the stationary point of the damped phase
    printed,         // 𝒞, ℒ from the real stationary point with η̄ in the prefactor
};

struct iplus_options {
    double c_thresh = default_region_thresh;
    connection_variant variant = connection_variant::complex_saddle;
    bool damping = true;  // keep the e^{-4lη} factor (γ̃, γ̆ and the -4il shifts)
};

namespace detail {

inline cplx iplus_region_I(int l, const scaled_point& pt, bool damping) {
    const cplx b{2.0 * l * pt.tau - pt.r_tilde, damping ? -4.0 * l : 0.0};
    if (b == cplx{0.0, 0.0}) fail(errc::domain, "i_plus: region I form is singular at r̃ = 2lτ");
    return 4.0 / (b * b * b);
}

inline cplx iplus_region_II(int l, const scaled_point& pt) {
    const phase_data d = stationary_point(l, pt);
    if (!d.has_eta || d.eta == 0.0) fail(errc::domain, "i_plus: region II requires β_l > 1");
    const cplx i{0.0, 1.0};
    const double sh2 = std::sinh(2.0 * d.eta);
    return -std::sqrt(std::numbers::pi / (2.0 * std::abs(d.theta_pp))) * std::exp(i * d.theta + i * std::numbers::pi / 4.0) *
           sh2 * sh2 * std::exp(-4.0 * l * d.eta);
}

// Region III. On the 2lτ > r̃ side: -2/(3lτ) + (4i/3)(b/3lτ)^{3/2} S(iγ̃), b = 2lτ - r̃ - 4il, written
// as (4i/3)(b/3lτ)^{3/2}[S(iγ̃) - 1/(iγ̃)]. On the r̃ ≥ 2lτ side: -2/(3lτ) + (4/3)(A/3lτ)^{3/2}
// [S(γ̆) + (π/2)√3 e^{-iπ/3} H1(γ̆)], A = r̃ - 2lτ + 4il, written likewise.
inline cplx iplus_region_III(int l, const scaled_point& pt, bool damping) {
    const auto ord = lommel_order::s0third();
    const double ltau = l * pt.tau;
    const double gap = 2.0 * ltau - pt.r_tilde;
    const cplx i{0.0, 1.0};
    const double shift = damping ? 4.0 * l : 0.0;
    if (!damping && gap == 0.0) return -2.0 / (3.0 * ltau);
    if (gap > 0.0) {
        const cplx b{gap, -shift};
        const cplx z = i * gamma_of(b, ltau);
        return 4.0 * i / 3.0 * cpow(b / (3.0 * ltau), 1.5) * lommel_S_reduced(ord, z);
    }
    const cplx A{-gap, shift};
    const cplx g = gamma_of(A, ltau);
    const cplx bracket = lommel_S_reduced(ord, g) + hankel_continuation_factor() * bessel_third(bessel_kind::H1, g);
    return 4.0 / 3.0 * cpow(A / (3.0 * ltau), 1.5) * bracket;
}

inline cplx iplus_connection_saddle(int l, const scaled_point& pt) {
    const auto ord = lommel_order::s0third();
    const damped_saddle s = damped_stationary_point(l, pt.r_tilde, pt.tau);
    const cplx sh2 = std::sinh(2.0 * s.eta);
    const cplx C = std::sqrt(s.phi / (-3.0 * s.phi_pp)) * sh2 * sh2;
    // -C [1/Φ + S(Φ e^{-iπ})] with S(Φ e^{-iπ}) = -S(Φ) - (π/2)√3 e^{-iπ/3} H1(Φ)
    return C * (lommel_S_reduced(ord, s.phi) + hankel_continuation_factor() * bessel_third(bessel_kind::H1, s.phi));
}

inline cplx iplus_connection_printed(int l, const scaled_point& pt) {
    const auto ord = lommel_order::s0third();
    const phase_data d = stationary_point(l, pt);
    const double ltau = l * pt.tau;
    const double ch = std::cosh(d.eta);
    const double root = std::sqrt(1.0 + 2.0 * ch * ch);
    const cplx i{0.0, 1.0};
    cplx w;
    if (d.eta == 0.0) {
        w = std::polar(std::pow(8.0 * l / 3.0, 1.5) / std::sqrt(2.0 * ltau), 0.75 * std::numbers::pi);
    } else {
        w = d.theta * detail::cpow(1.0 + i * (8.0 / 3.0) * double(l) * d.eta / d.theta, 1.5);
    }
    const cplx sh2 = std::sinh(2.0 * d.eta_bar);
    const cplx pref = std::sinh(d.eta_bar) * sh2 * sh2 / (std::sqrt(3.0) * root);
    return -2.0 / std::sqrt(3.0) * ch * ch * ch / root / ltau - pref * lommel_S(ord, w, -1);
}

}  // namespace detail

inline cplx i_plus(int l, const scaled_point& pt, iplus_mode mode = iplus_mode::automatic, const iplus_options& opt = {}) {
    detail::check_l(l);
    pt.validate();
    const double beta = pt.r_tilde / (2.0 * l * pt.tau);
    if (mode == iplus_mode::automatic) {
        const region reg = classify_region(l, pt, opt.c_thresh);
        if (beta >= 1.0) mode = iplus_mode::connection;
        else mode = reg == region::III ? iplus_mode::region_III : iplus_mode::region_I;
    }
    switch (mode) {
    case iplus_mode::region_I: return detail::iplus_region_I(l, pt, opt.damping);
    case iplus_mode::region_II: return detail::iplus_region_II(l, pt);
    case iplus_mode::region_III: return detail::iplus_region_III(l, pt, opt.damping);
    case iplus_mode::connection:
        if (beta < 1.0) fail(errc::domain, "i_plus: connection formula requires β_l >= 1");
        return opt.variant == connection_variant::printed ? detail::iplus_connection_printed(l, pt)
                                                          : detail::iplus_connection_saddle(l, pt);
    case iplus_mode::automatic: break;
    }
    return {};
}

// R_M ≈ (r̃/(4τ⁴)) ψ'''((M+1)(1 - 2i/τ)) and its large-M form r̃/(2τ⁴(M+1)³).
inline cplx remainder_bound(int M, const scaled_point& pt) {
    if (M < 1) fail(errc::domain, "remainder_bound: M must be >= 1");
    pt.validate();
    const double t4 = std::pow(pt.tau, 4);
    return pt.r_tilde / (4.0 * t4) * polygamma(3, double(M + 1) * cplx{1.0, -2.0 / pt.tau});
}

inline double remainder_bound_simplified(int M, const scaled_point& pt) {
    if (M < 1) fail(errc::domain, "remainder_bound: M must be >= 1");
    pt.validate();
    return pt.r_tilde / (2.0 * std::pow(pt.tau, 4) * std::pow(M + 1.0, 3));
}

struct asymptotic_options {
    double c_thresh = default_region_thresh;
    connection_variant variant = connection_variant::complex_saddle;
    double tol = 1e-6;  // drives the explicit part of the series, l_max = L + max(50, ⌈tol^{-1/3}⌉)
};

struct asymptotic_result {
    cplx value;
    int first_sum_terms = 0;  // l with 2lτ < r̃ (connection form)
    int l_max = 0;            // last explicitly summed l; the rest is a closed-form ψ'' tail
    bool low_confidence = false;  // τ below the validity floor of the expansion
};

namespace detail {

// Fixed-order pairwise summation, independent of how the terms were produced.
inline cplx pairwise_sum(const cplx* v, std::size_t n) {
    if (n == 0) return {0.0, 0.0};
    if (n <= 8) {
        cplx s{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) s += v[j];
        return s;
    }
    const std::size_t h = n / 2;
    return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

}  // namespace detail

// Λ ≈ (1/(2π²r̃)) { Σ_{2lτ<r̃} I_{l,+}[connection] + Σ_{2lτ≥r̃} I_{l,+}[III inside the band, I outside]
//                   - Σ I_{l,-} }, with the damped region-I tail beyond l_max and the damped
// I_{-} sum both in closed form via ψ''.
inline asymptotic_result lambda_asymptotic_detailed(const scaled_point& pt, const asymptotic_options& opt = {}) {
    pt.validate();
    if (!(opt.c_thresh > 0.0)) fail(errc::domain, "lambda_asymptotic: c_thresh must be > 0");
    if (!(opt.tol > 0.0)) fail(errc::domain, "lambda_asymptotic: tol must be > 0");
    if (pt.r_tilde == 0.0) fail(errc::domain, "lambda_asymptotic: r_tilde must be > 0");

    asymptotic_result res;
    res.low_confidence = pt.tau < 10.0;
    const double x = pt.r_tilde / (2.0 * pt.tau);
    const int L = int(std::ceil(x)) - 1;  // l with 2lτ < r̃ strictly
    const int extra = std::max(50, int(std::ceil(std::cbrt(1.0 / opt.tol))));
    res.first_sum_terms = L;
    res.l_max = L + extra;

    iplus_options io;
    io.c_thresh = opt.c_thresh;
    io.variant = opt.variant;

    std::vector<cplx> terms;
    terms.reserve(res.l_max + 2);
    for (int l = 1; l <= L; ++l) terms.push_back(i_plus(l, pt, iplus_mode::connection, io));
    for (int l = L + 1; l <= res.l_max; ++l) {
        const bool band = classify_region(l, pt, opt.c_thresh) == region::III;
        terms.push_back(i_plus(l, pt, band ? iplus_mode::region_III : iplus_mode::region_I, io));
    }
    const cplx h{2.0 * pt.tau, -4.0};
    const cplx h3 = h * h * h;
    terms.push_back(-2.0 / h3 * polygamma(2, double(res.l_max + 1) - pt.r_tilde / h));
    terms.push_back(-i_minus_sum_damped(pt));

    const cplx total = detail::pairwise_sum(terms.data(), terms.size());
    res.value = total / (2.0 * std::numbers::pi * std::numbers::pi * pt.r_tilde);
    return res;
}

inline cplx lambda_asymptotic(const scaled_point& pt, const asymptotic_options& opt = {}) {
    return lambda_asymptotic_detailed(pt, opt).value;
}

// Region tags for l = 1 .. [r̃/(2τ)] + 1, e.g. "II,III".
inline std::string region_profile(const scaled_point& pt, double c_thresh = default_region_thresh) {
    pt.validate();
    const int n = int(std::floor(pt.r_tilde / (2.0 * pt.tau))) + 1;
    std::string out;
    for (int l = 1; l <= n; ++l) {
        if (l > 1) out += ',';
        out += region_name(classify_region(l, pt, c_thresh));
    }
    return out;
}

// Λ ≈ (1/(8π²r̃τ³)) [ψ''(1 + r̃/(2τ)) - ψ''(1 - r̃/(2τ))], valid while every l is in region I.
inline double lambda_small_r(const scaled_point& pt, double c_thresh = default_region_thresh) {
    pt.validate();
    if (classify_region(1, pt, c_thresh) != region::I)
        fail(errc::domain, "lambda_small_r: 2τ - r̃ must exceed the region-III band for l = 1");
    const double x = pt.r_tilde / (2.0 * pt.tau);
    const double t3 = pt.tau * pt.tau * pt.tau;
    if (pt.r_tilde < 1e-6 * pt.tau) {
        // bracket ≈ 2x ψ'''(1) = 2x π⁴/15
        return std::pow(std::numbers::pi, 2) / (120.0 * std::pow(pt.tau, 4));
    }
    const double bracket = polygamma(2, cplx{1.0 + x, 0.0}).real() - polygamma(2, cplx{1.0 - x, 0.0}).real();
    return bracket / (8.0 * std::numbers::pi * std::numbers::pi * pt.r_tilde * t3);
}

// Finite-sum approximation for 2(n-1)τ < r̃ < 2nτ: connection terms for l < n, the region-III
// term at l = n, and the undamped region-I / I_- remainder in ψ'' form.
inline cplx lambda_finite_sums(const scaled_point& pt, connection_variant variant = connection_variant::printed) {
    pt.validate();
    if (pt.r_tilde == 0.0) fail(errc::domain, "lambda_finite_sums: r_tilde must be > 0");
    const double x = pt.r_tilde / (2.0 * pt.tau);
    const int n = int(std::floor(x)) + 1;
    if (double(n) == x) fail(errc::domain, "lambda_finite_sums: r̃/(2τ) must not be an integer");
    iplus_options io;
    io.variant = variant;
    cplx braces{0.0, 0.0};
    for (int l = 1; l < n; ++l) braces -= i_plus(l, pt, iplus_mode::connection, io);
    braces -= detail::iplus_region_III(n, pt, true);
    double tail = polygamma(2, cplx{1.0 + x, 0.0}).real() - polygamma(2, cplx{1.0 - x, 0.0}).real();
    for (int l = 1; l <= n; ++l) tail -= 2.0 / std::pow(l - x, 3);
    braces -= tail / (4.0 * std::pow(pt.tau, 3));
    return -braces / (2.0 * std::numbers::pi * std::numbers::pi * pt.r_tilde);
}

}  // namespace pairwave
