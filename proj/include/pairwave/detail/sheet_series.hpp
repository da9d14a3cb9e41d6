#pragma once

// 50-digit reference for S_{0,1/3} on any sheet: z = ρ e^{iφ} with φ unrestricted, summing
// s_{0,1/3} and J_{±1/3} directly with the fractional powers taken as ρ^ν e^{iνφ}.
// Used to check the continuation identities independently of how the library implements them.

#include <complex>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "pairwave/complex.hpp"

namespace pairwave::detail::sheet {

using real50 = boost::multiprecision::cpp_bin_float_50;
using complex50 = boost::multiprecision::cpp_complex_50;

inline real50 pi50() { return boost::math::constants::pi<real50>(); }

inline complex50 polar50(const real50& r, const real50& phi) {
    return complex50(r * cos(phi), r * sin(phi));
}

// J_ν(ρ e^{iφ}) = Σ_k (-1)^k (z/2)^{2k+ν} / (k! Γ(k+ν+1)).
inline complex50 bessel_j(const real50& nu, const real50& rho, const real50& phi) {
    const complex50 z = polar50(rho, phi);
    const complex50 q = -(z * z) / 4;
    complex50 term = polar50(pow(rho / 2, nu), nu * phi) / boost::math::tgamma(nu + 1);
    complex50 sum = term;
    const real50 eps("1e-52");
    for (int k = 1; k < 2000; ++k) {
        term *= q / (real50(k) * (real50(k) + nu));
        sum += term;
        if (abs(term) < eps * abs(sum) && k > 2) break;
    }
    return sum;
}

// S_{0,1/3}(z) = (9z/8) 1F2(1; 4/3, 5/3; -z²/4) - (π/2)[tan(π/6) J_{1/3}(z) + Y_{1/3}(z)].
inline complex50 lommel_s0third(const real50& rho, const real50& phi) {
    const real50 third = real50(1) / 3;
    const complex50 z = polar50(rho, phi);
    const complex50 q = -(z * z) / 4;
    complex50 term(1);
    complex50 f(1);
    const real50 eps("1e-52");
    for (int k = 0; k < 4000; ++k) {
        term *= q / ((real50(k) + real50(4) / 3) * (real50(k) + real50(5) / 3));
        f += term;
        if (abs(term) < eps * abs(f) && k > 2) break;
    }
    const complex50 s = z * 9 / 8 * f;
    const real50 pi = pi50();
    const complex50 jp = bessel_j(third, rho, phi);
    const complex50 jm = bessel_j(-third, rho, phi);
    const complex50 y = (jp * cos(pi / 3) - jm) / sin(pi / 3);
    return s - pi / 2 * (tan(pi / 6) * jp + y);
}

inline cplx to_cplx(const complex50& z) {
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

// S_{0,1/3}(ρ e^{iπ·phase}), the phase given in units of π so sheet offsets stay exact.
inline cplx lommel_s0third_sheet(double rho, double phase) {
    return to_cplx(lommel_s0third(real50(rho), real50(phase) * pi50()));
}

}  // namespace pairwave::detail::sheet
