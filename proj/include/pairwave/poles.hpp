#pragma once

// Zero-data propagator U(k) in units 16πaρ0 = 1, continued to complex k, and its poles.
// With k = sinh η the poles solve (t/2) sinh 2η - 2iη = mπ, m = ±1, ±2, ...

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "pairwave/complex.hpp"
#include "pairwave/error.hpp"

namespace pairwave {

struct pole_record {
    int m = 0;
    cplx estimate;
    cplx eta;
    cplx k;
    double residual = 0.0;
    int iterations = 0;
    bool converged = false;
    std::string message;

    // 1 or 3 for the k-plane quadrant, 0 on an axis
    int quadrant() const {
        if (k.real() > 0.0 && k.imag() > 0.0) return 1;
        if (k.real() < 0.0 && k.imag() < 0.0) return 3;
        if (k.real() < 0.0 && k.imag() > 0.0) return 2;
        if (k.real() > 0.0 && k.imag() < 0.0) return 4;
        return 0;
    }
};

inline cplx pole_equation(cplx eta, int m, double t) {
    return 0.5 * t * std::sinh(2.0 * eta) - cplx{0.0, 2.0} * eta - double(m) * std::numbers::pi;
}

inline cplx pole_equation_derivative(cplx eta, double t) { return t * std::cosh(2.0 * eta) - cplx{0.0, 2.0}; }

// η ≈ mπ/(t - 2i) for |m|π ≤ t, else η ≈ (1/2) sg(m) (1 + i/(|m|π)) ln(4|m|π/t).
inline cplx pole_estimate(int m, double t) {
    if (m == 0) fail(errc::domain, "pole_estimate: m must be nonzero");
    if (!(t > 0.0)) fail(errc::domain, "pole_estimate: t must be > 0");
    const double mp = std::abs(m) * std::numbers::pi;
    if (mp <= t) return double(m) * std::numbers::pi / cplx{t, -2.0};
    const double sg = m > 0 ? 1.0 : -1.0;
    return 0.5 * sg * cplx{1.0, 1.0 / mp} * std::log(4.0 * mp / t);
}

namespace detail {

// sin(ωt)/(2ω) and cos(ωt) as functions of ω², which keeps k = 0 and k = ±i regular.
inline std::pair<cplx, cplx> even_parts(cplx w2, double t) {
    const cplx x2 = w2 * t * t;
    if (std::abs(x2) < 1e-4) {
        const cplx s = 0.5 * t * (1.0 - x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0)));
        const cplx c = 1.0 - x2 / 2.0 * (1.0 - x2 / 12.0 * (1.0 - x2 / 30.0));
        return {s, c};
    }
    const cplx w = std::sqrt(w2);
    return {std::sin(w * t) / (2.0 * w), std::cos(w * t)};
}

}  // namespace detail

// U(k) = -i𝒮 / (i(2k² + 1)𝒮 + cos ωt), 𝒮 = sin(ωt)/(2ω), ω² = k²(k² + 1).
inline cplx u_eval(cplx k, double t) {
    if (!(t >= 0.0)) fail(errc::domain, "u_eval: t must be >= 0");
    if (t == 0.0) return {0.0, 0.0};
    const cplx k2 = k * k;
    const auto [s, c] = detail::even_parts(k2 * (k2 + 1.0), t);
    const cplx den = cplx{0.0, 1.0} * (2.0 * k2 + 1.0) * s + c;
    if (std::abs(den) < 1e-13) {
        // locate the nearest pole for the diagnostic
        const cplx eta = std::asinh(k);
        const double m = std::round((0.5 * t * std::sinh(2.0 * eta) - cplx{0.0, 2.0} * eta).real() / std::numbers::pi);
        fail(errc::singularity, "u_eval: k is at a pole (nearest index m = " + std::to_string(long(m)) + ")");
    }
    return cplx{0.0, -1.0} * s / den;
}

// Newton iteration in η seeded by pole_estimate. Failures are reported per record.
inline pole_record refine_pole(int m, double t, int max_iter = 100) {
    pole_record rec;
    rec.m = m;
    rec.estimate = pole_estimate(m, t);
    cplx eta = rec.estimate;
    for (int it = 1; it <= max_iter; ++it) {
        const cplx f = pole_equation(eta, m, t);
        const cplx d = pole_equation_derivative(eta, t);
        if (d == cplx{0.0, 0.0}) break;
        const cplx step = f / d;
        eta -= step;
        rec.iterations = it;
        if (!std::isfinite(eta.real()) || !std::isfinite(eta.imag())) break;
        if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(eta))) {
            rec.converged = true;
            break;
        }
    }
    rec.eta = eta;
    rec.k = std::sinh(eta);
    rec.residual = std::abs(pole_equation(eta, m, t));
    if (!rec.converged) {
        rec.message = "Newton iteration did not converge";
    } else if (!(eta.imag() > -std::numbers::pi / 2 && eta.imag() <= std::numbers::pi / 2)) {
        rec.converged = false;
        rec.message = "root left the strip -π/2 < Im η <= π/2";
    } else if (rec.residual >= 1e-10) {
        rec.converged = false;
        rec.message = "residual above 1e-10";
    }
    return rec;
}

inline std::vector<pole_record> find_poles(double t, int m_lo, int m_hi) {
    if (!(t > 0.0)) fail(errc::domain, "find_poles: t must be > 0");
    if (m_lo > m_hi) fail(errc::domain, "find_poles: empty m range");
    if (m_lo <= 0 && m_hi >= 0) fail(errc::domain, "find_poles: m range must exclude 0");
    std::vector<pole_record> out;
    for (int m = m_lo; m <= m_hi; ++m) out.push_back(refine_pole(m, t));
    return out;
}

inline std::vector<pole_record> find_poles(double t, const std::vector<int>& ms) {
    if (!(t > 0.0)) fail(errc::domain, "find_poles: t must be > 0");
    std::vector<pole_record> out;
    for (int m : ms) {
        if (m == 0) fail(errc::domain, "find_poles: m = 0 is not a pole index");
        out.push_back(refine_pole(m, t));
    }
    return out;
}

}  // namespace pairwave
