#pragma once

// Lommel function S_{μ,ν}(z) for the orders (0,0), (0,1/3) and (0,4).
//   |z| < 30: s_{μ,ν}(z) via 1F2 plus the Bessel correction, both in __float128.
//   |z| >= 30: S ~ z^{μ-1} Σ_k (-1)^k c_k z^{-2k}, c_k = Π_{j≤k}((μ-2j+1)² - ν²), optimally truncated.

#include <cmath>
#include <complex>
#include <utility>

#include "pairwave/detail/wide.hpp"
#include "pairwave/error.hpp"
#include "pairwave/specfun/bessel.hpp"
#include "pairwave/specfun/hypergeometric.hpp"

namespace pairwave {

struct lommel_order {
    int mu = 0;
    int nu_num = 0;
    int nu_den = 1;

    double mu_value() const { return mu; }
    double nu_value() const { return double(nu_num) / nu_den; }

    static constexpr lommel_order s00() { return {0, 0, 1}; }
    static constexpr lommel_order s0third() { return {0, 1, 3}; }
    static constexpr lommel_order s04() { return {0, 4, 1}; }

    bool supported() const {
        return mu == 0 && ((nu_num == 0) || (nu_num == 1 && nu_den == 3) || (nu_num == 4 && nu_den == 1));
    }
    friend bool operator==(const lommel_order&, const lommel_order&) = default;
};

namespace detail {

inline constexpr double lommel_asym_switch = 30.0;

inline wcomplex lommel_series_wide(lommel_order ord, wcomplex z) {
    const wreal mu = ord.mu;
    const wreal nu = wreal(ord.nu_num) / ord.nu_den;
    const wreal pi = wpi();
    const wreal denom = (mu + 1) * (mu + 1) - nu * nu;
    const wcomplex f = hyp1f2_wide((mu - nu + 3) / 2, (mu + nu + 3) / 2, -z * z / wreal(4), wreal(1e-33));
    const wcomplex s = wpow(z, mu + 1) / denom * f;

    // 2^{μ-1} Γ((μ-ν+1)/2) Γ((μ+ν+1)/2) [sin((μ-ν)π/2) J_ν - cos((μ-ν)π/2) Y_ν]
    const wreal coef = powq(2, mu - 1) * tgammaq((mu - nu + 1) / 2) * tgammaq((mu + nu + 1) / 2);
    const wreal a = (mu - nu) * pi / 2;
    const wcomplex jnu = j_series(nu, z);
    const wcomplex ynu = y_series(nu, z);
    return s + coef * (sinq(a) * jnu - cosq(a) * ynu);
}

// Returns {leading term z^{μ-1}, rest of the optimally truncated expansion}.
inline std::pair<cplx, cplx> lommel_asym_parts(lommel_order ord, cplx z) {
    const double mu = ord.mu_value();
    const double nu = ord.nu_value();
    const cplx lead = std::pow(z, mu - 1.0);
    const cplx w = -1.0 / (z * z);
    cplx term = lead;
    cplx rest{0.0, 0.0};
    double last = std::abs(term);
    for (int k = 1; k < 200; ++k) {
        const double f = (mu - 2.0 * k + 1.0) * (mu - 2.0 * k + 1.0) - nu * nu;
        const cplx next = term * f * w;
        const double mag = std::abs(next);
        if (mag > last) break;
        if (mag == 0.0) break;
        term = next;
        rest += term;
        last = mag;
        if (mag <= 1e-17 * std::abs(lead)) break;
    }
    return {lead, rest};
}

inline void check_lommel(lommel_order ord, cplx z, int branch_offset) {
    if (!ord.supported()) fail(errc::domain, "lommel_S: unsupported order");
    check_bessel_arg(z, "lommel_S");
    if (branch_offset != -1 && branch_offset != 0 && branch_offset != 2)
        fail(errc::domain, "lommel_S: branch_offset must be -1, 0 or +2");
    if (branch_offset != 0 && !(ord == lommel_order::s0third()))
        fail(errc::domain, "lommel_S: branch continuation implemented for order (0,1/3) only");
}

// (π/2)√3 e^{-iπ/3}
inline cplx hankel_continuation_factor() {
    return 0.5 * M_PI * std::sqrt(3.0) * std::polar(1.0, -M_PI / 3.0);
}

}  // namespace detail

// S_{μ,ν} on the principal sheet (branch_offset = 0), or S_{0,1/3}(z e^{-iπ}) (offset -1) and
// S_{0,1/3}(z e^{2iπ}) (offset +2) via the Hankel continuation identities.
inline cplx lommel_S(lommel_order ord, cplx z, int branch_offset = 0) {
    detail::check_lommel(ord, z, branch_offset);
    cplx principal;
    if (std::abs(z) >= detail::lommel_asym_switch) {
        const auto [lead, rest] = detail::lommel_asym_parts(ord, z);
        principal = lead + rest;
    } else {
        principal = detail::narrow(detail::lommel_series_wide(ord, detail::widen(z)));
    }
    if (branch_offset == 0) return principal;
    const cplx h = detail::hankel_continuation_factor() * bessel_third(bessel_kind::H1, z);
    return branch_offset == -1 ? -principal - h : principal + h;
}

// S_{μ,ν}(z) - z^{μ-1} on the principal sheet. Avoids the cancellation that appears when the
// leading term is subtracted from a large-argument value.
inline cplx lommel_S_reduced(lommel_order ord, cplx z) {
    detail::check_lommel(ord, z, 0);
    if (std::abs(z) >= detail::lommel_asym_switch) return detail::lommel_asym_parts(ord, z).second;
    const detail::wcomplex w = detail::widen(z);
    return detail::narrow(detail::lommel_series_wide(ord, w) - detail::wpow(w, detail::wreal(ord.mu - 1)));
}

// Residuals of S(iz e^{-iπ}) + S(iz) - √3 K_{1/3}(z) and S(iz e^{2iπ}) - S(iz) + √3 K_{1/3}(z).
inline std::pair<cplx, cplx> lommel_modified_identities(double z) {
    if (!(z > 0.0)) fail(errc::domain, "lommel_modified_identities: z must be positive");
    const auto ord = lommel_order::s0third();
    const cplx iz{0.0, z};
    const cplx s = lommel_S(ord, iz);
    const cplx k = std::sqrt(3.0) * bessel_third(bessel_kind::K, cplx{z, 0.0});
    return {lommel_S(ord, iz, -1) + s - k, lommel_S(ord, iz, 2) - s + k};
}

// |z²S'' + zS' + (z² - ν²)S - z^{μ+1}| / |z^{μ+1}| on the path the evaluator takes: five-point
// differences of the wide series below the switch, termwise derivatives of the expansion above.
inline double lommel_ode_residual(lommel_order ord, cplx z) {
    detail::check_lommel(ord, z, 0);
    const double mu = ord.mu_value();
    const double nu = ord.nu_value();
    if (std::abs(z) < detail::lommel_asym_switch) {
        using detail::wcomplex;
        using detail::wreal;
        const wcomplex w = detail::widen(z);
        const wreal h = wreal(1e-5) * detail::wabs(w);
        auto f = [&](int j) { return detail::lommel_series_wide(ord, w + wreal(j) * h); };
        const wcomplex fm2 = f(-2), fm1 = f(-1), f0 = f(0), fp1 = f(1), fp2 = f(2);
        const wcomplex q1 = (fm2 - wreal(8) * fm1 + wreal(8) * fp1 - fp2) / (wreal(12) * h);
        const wcomplex q2 = (-fm2 + wreal(16) * fm1 - wreal(30) * f0 + wreal(16) * fp1 - fp2) / (wreal(12) * h * h);
        const wcomplex res = w * w * q2 + w * q1 + (w * w - wreal(nu * nu)) * f0 - detail::wpow(w, wreal(mu + 1));
        return double(detail::wabs(res) / detail::wabs(detail::wpow(w, wreal(mu + 1))));
    }
    // same truncation as lommel_asym_parts
    const cplx w = -1.0 / (z * z);
    cplx term = std::pow(z, mu - 1.0);
    double p = mu - 1.0;
    cplx y = term;
    cplx d1 = p * term / z;
    cplx d2 = p * (p - 1.0) * term / (z * z);
    double last = std::abs(term);
    for (int k = 1; k < 200; ++k) {
        const double f = (mu - 2.0 * k + 1.0) * (mu - 2.0 * k + 1.0) - nu * nu;
        const cplx next = term * f * w;
        const double mag = std::abs(next);
        if (mag > last || mag == 0.0) break;
        term = next;
        p -= 2.0;
        y += term;
        d1 += p * term / z;
        d2 += p * (p - 1.0) * term / (z * z);
        last = mag;
        if (mag <= 1e-17 * std::abs(std::pow(z, mu - 1.0))) break;
    }
    const cplx rhs = std::pow(z, mu + 1.0);
    return std::abs(z * z * d2 + z * d1 + (z * z - nu * nu) * y - rhs) / std::abs(rhs);
}

}  // namespace pairwave
