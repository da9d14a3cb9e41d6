#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "pairwave/complex.hpp"
#include "pairwave/error.hpp"

namespace pairwave {

namespace detail {

inline bool near_nonpositive_integer(cplx z) {
    if (z.real() > 0.5 || std::abs(z.imag()) > 1e-12) return false;
    return std::abs(z.real() - std::round(z.real())) < 1e-12;
}

// Bernoulli numbers B_{2k}, k = 1..10.
inline constexpr std::array<double, 10> bernoulli_even = {
    1.0 / 6.0,       -1.0 / 30.0,     1.0 / 42.0,         -1.0 / 30.0,       5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0,       -3617.0 / 510.0,    43867.0 / 798.0,   -174611.0 / 330.0,
};

}  // namespace detail

// ψ^(n)(z) for n in {2, 3}: upward recurrence to Re z >= 18, then the Stirling-type series
//   ψ^(n)(z) ~ (-1)^{n+1} [ (n-1)!/z^n + n!/(2 z^{n+1}) + Σ_k B_2k (2k+n-1)!/((2k)! z^{2k+n}) ].
inline cplx polygamma(int n, cplx z) {
    if (n != 2 && n != 3) fail(errc::domain, "polygamma: order must be 2 or 3");
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) fail(errc::domain, "polygamma: non-finite argument");
    if (detail::near_nonpositive_integer(z)) fail(errc::domain, "polygamma: pole at non-positive integer");

    const double sign = (n % 2 == 1) ? 1.0 : -1.0;  // (-1)^{n+1}
    const double nfact = (n == 2) ? 2.0 : 6.0;

    cplx shift{0.0, 0.0};
    while (z.real() < 18.0) {
        shift += 1.0 / std::pow(z, n + 1);
        z += 1.0;
    }

    const cplx inv = 1.0 / z;
    const cplx inv2 = inv * inv;
    const double nm1fact = nfact / n;
    cplx series = nm1fact * std::pow(inv, n) + 0.5 * nfact * std::pow(inv, n + 1);

    // (2k+n-1)! / (2k)! = Π_{j=1}^{n-1} (2k+j)
    cplx p = std::pow(inv, n) * inv2;
    for (std::size_t k = 1; k <= detail::bernoulli_even.size(); ++k) {
        double rising = 1.0;
        for (int j = 1; j <= n - 1; ++j) rising *= double(2 * k + j);
        const cplx term = detail::bernoulli_even[k - 1] * rising * p;
        series += term;
        if (std::abs(term) < 1e-18 * std::abs(series)) break;
        p *= inv2;
    }
    // ψ^(n)(z) = ψ^(n)(z+N) - (-1)^{n+1} n! Σ 1/(z+j)^{n+1}
    return sign * (series + nfact * shift);
}

}  // namespace pairwave
