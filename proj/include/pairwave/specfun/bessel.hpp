#pragma once

// Bessel functions of the orders needed by the Lommel evaluator: 1/3 (J, Y, H1, K) and the
// integer orders 0 and 4 (J, Y). Small arguments use power series in __float128, large
// arguments the Hankel expansions.

#include <cmath>
#include <complex>

#include "pairwave/complex.hpp"
#include "pairwave/detail/wide.hpp"
#include "pairwave/error.hpp"

namespace pairwave {

enum class bessel_kind { J, Y, H1, K };

namespace detail {

inline constexpr double hankel_switch = 20.0;

// Σ_k (-z²/4)^k / (k! Γ(k+ν+1)) times (z/2)^ν; sign = -1 gives I_ν instead of J_ν.
inline wcomplex cyl_series(wreal nu, wcomplex z, int sign) {
    const wcomplex q = wreal(sign) * z * z / wreal(4);
    wcomplex term = wcomplex(wreal(1) / tgammaq(nu + 1), 0);
    wcomplex sum = term;
    for (int k = 1; k < 10000; ++k) {
        term *= q / (wreal(k) * (wreal(k) + nu));
        sum += term;
        if (wreal(k) * wreal(k) > wabs(q) && wabs(term) <= wreal(1e-34) * wabs(sum)) break;
    }
    return wpow(z / wreal(2), nu) * sum;
}

inline wcomplex j_series(wreal nu, wcomplex z) { return cyl_series(nu, z, -1); }
inline wcomplex i_series(wreal nu, wcomplex z) { return cyl_series(nu, z, +1); }

inline wreal digamma_int(int m) {  // ψ(m) for m >= 1
    wreal s = -strtoflt128("0.57721566490153286060651209008240243104215933593992", nullptr);
    for (int j = 1; j < m; ++j) s += wreal(1) / wreal(j);
    return s;
}

// Y_n for integer n >= 0 (DLMF 10.8.1).
inline wcomplex yn_series(int n, wcomplex z) {
    const wreal pi = wpi();
    const wcomplex half = z / wreal(2);
    const wcomplex q = z * z / wreal(4);
    wcomplex finite{0, 0};
    if (n > 0) {
        wreal fact_ratio = 1;  // (n-k-1)!/k!
        for (int j = 1; j <= n - 1; ++j) fact_ratio *= wreal(j);
        wcomplex qk{1, 0};
        for (int k = 0; k <= n - 1; ++k) {
            finite += fact_ratio * qk;
            qk *= q;
            if (k < n - 1) fact_ratio /= wreal(n - k - 1) * wreal(k + 1);
        }
        finite = -finite / (pi * wpow(half, wreal(n)));
    }
    wreal nfact = 1;
    for (int j = 2; j <= n; ++j) nfact *= wreal(j);
    wcomplex term = wcomplex(wreal(1) / nfact, 0);
    wcomplex sum = (digamma_int(1) + digamma_int(n + 1)) * term;
    for (int k = 1; k < 10000; ++k) {
        term *= -q / (wreal(k) * wreal(n + k));
        const wcomplex add = (digamma_int(k + 1) + digamma_int(n + k + 1)) * term;
        sum += add;
        if (wreal(k) * wreal(k) > wabs(q) && wabs(add) <= wreal(1e-34) * wabs(sum)) break;
    }
    const wcomplex jn = j_series(wreal(n), z);
    return finite + wreal(2) / pi * wlog(half) * jn - wpow(half, wreal(n)) / pi * sum;
}

inline wcomplex y_series(wreal nu, wcomplex z) {
    const wreal r = nu - roundq(nu);
    if (fabsq(r) < wreal(1e-30)) return yn_series(int(roundq(nu)), z);
    const wreal pi = wpi();
    return (j_series(nu, z) * cosq(nu * pi) - j_series(-nu, z)) / sinq(nu * pi);
}

// K_ν for non-integer ν: (π/2)(I_{-ν} - I_ν)/sin νπ.
inline wcomplex k_series(wreal nu, wcomplex z) {
    const wreal pi = wpi();
    return pi / wreal(2) * (i_series(-nu, z) - i_series(nu, z)) / sinq(nu * pi);
}

// Σ_k a_k(ν) w^k with a_k = Π_{j≤k}(4ν² - (2j-1)²)/(k! 8^k), truncated at the smallest term.
inline cplx hankel_sum(double nu, cplx w) {
    const double mu = 4.0 * nu * nu;
    cplx term{1.0, 0.0};
    cplx sum = term;
    double last = std::abs(term);
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        const cplx next = term * ((mu - odd * odd) / (8.0 * k)) * w;
        const double mag = std::abs(next);
        if (mag > last) break;
        term = next;
        sum += term;
        last = mag;
        if (mag <= 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

inline cplx hankel1_asym(double nu, cplx z) {
    const double pi = M_PI;
    const cplx i{0.0, 1.0};
    const cplx phase = std::exp(i * (z - 0.5 * nu * pi - 0.25 * pi));
    return std::sqrt(2.0 / (pi * z)) * phase * hankel_sum(nu, i / z);
}

inline cplx hankel2_asym(double nu, cplx z) {
    const double pi = M_PI;
    const cplx i{0.0, 1.0};
    const cplx phase = std::exp(-i * (z - 0.5 * nu * pi - 0.25 * pi));
    return std::sqrt(2.0 / (pi * z)) * phase * hankel_sum(nu, -i / z);
}

// J and Y for |z| large with Re z < 0, from w = -z via z = w e^{±iπ}:
//   J(z) = e^{±iνπ} J(w),  Y(z) = e^{∓iνπ} Y(w) ± 2i cos(νπ) J(w).
// Going through w keeps the Hankel expansions away from arg z = ±π.
inline std::pair<cplx, cplx> jy_reflected(double nu, cplx z) {
    const cplx w = -z;
    const cplx i{0.0, 1.0};
    const cplx h1 = hankel1_asym(nu, w), h2 = hankel2_asym(nu, w);
    const cplx jw = 0.5 * (h1 + h2), yw = (h1 - h2) / (2.0 * i);
    const double s = z.imag() >= 0.0 ? 1.0 : -1.0;
    const double a = s * nu * M_PI;
    return {std::polar(1.0, a) * jw, std::polar(1.0, -a) * yw + 2.0 * i * s * std::cos(nu * M_PI) * jw};
}

inline cplx besselk_asym(double nu, cplx z) {
    return std::sqrt(M_PI / (2.0 * z)) * std::exp(-z) * hankel_sum(nu, 1.0 / z);
}

inline void check_bessel_arg(cplx z, const char* who) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        fail(errc::domain, std::string(who) + ": non-finite argument");
    if (z == cplx{0.0, 0.0}) fail(errc::domain, std::string(who) + ": z = 0 is a branch point");
    if (z.imag() == 0.0 && z.real() < 0.0)
        fail(errc::domain, std::string(who) + ": argument on the branch cut");
}

}  // namespace detail

// J, Y, H1 of order nu (1/3, 0 or 4 in practice) and K of order 1/3, principal branch.
inline cplx bessel(bessel_kind kind, double nu, cplx z) {
    using namespace detail;
    check_bessel_arg(z, "bessel");
    const bool big = std::abs(z) >= hankel_switch;
    const cplx i{0.0, 1.0};
    switch (kind) {
    case bessel_kind::J:
        if (big && z.real() < 0.0) return jy_reflected(nu, z).first;
        if (big) return 0.5 * (hankel1_asym(nu, z) + hankel2_asym(nu, z));
        return narrow(j_series(wreal(nu), widen(z)));
    case bessel_kind::Y:
        if (big && z.real() < 0.0) return jy_reflected(nu, z).second;
        if (big) return (hankel1_asym(nu, z) - hankel2_asym(nu, z)) / (2.0 * i);
        return narrow(y_series(wreal(nu), widen(z)));
    case bessel_kind::H1:
        if (big && z.real() < 0.0 && z.imag() < 0.0) {
            // H1 is dominant here, so J + iY does not cancel
            const auto [j, y] = jy_reflected(nu, z);
            return j + i * y;
        }
        if (big) return hankel1_asym(nu, z);
        {
            const wcomplex w = widen(z);
            return narrow(j_series(wreal(nu), w) + wcomplex(0, 1) * y_series(wreal(nu), w));
        }
    case bessel_kind::K:
        if (std::abs(nu - std::round(nu)) < 1e-15) fail(errc::domain, "bessel: K implemented for non-integer order only");
        if (big) return besselk_asym(nu, z);
        return narrow(k_series(wreal(nu), widen(z)));
    }
    return {};
}

inline cplx bessel_third(bessel_kind kind, cplx z) { return bessel(kind, 1.0 / 3.0, z); }

}  // namespace pairwave
