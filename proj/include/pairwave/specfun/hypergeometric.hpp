#pragma once

#include <cmath>
#include <complex>

#include "pairwave/complex.hpp"
#include "pairwave/detail/wide.hpp"
#include "pairwave/error.hpp"

namespace pairwave {

namespace detail {

inline constexpr int hyp_term_cap = 10000;

// 1F2(1; b1, b2; z) = Σ z^k / ((b1)_k (b2)_k), summed in __float128 until
// |term| < rel_stop·|partial sum| once the terms are decreasing.
inline wcomplex hyp1f2_wide(wreal b1, wreal b2, wcomplex z, wreal rel_stop) {
    wcomplex term{1, 0};
    wcomplex sum = term;
    for (int k = 0; k < hyp_term_cap; ++k) {
        term *= z / ((b1 + k) * (b2 + k));
        sum += term;
        const bool decreasing = fabsq((b1 + k) * (b2 + k)) > wabs(z);
        if (decreasing && wabs(term) < rel_stop * wabs(sum)) return sum;
    }
    fail(errc::accuracy, "hyp1f2: series did not converge within the term cap");
}

inline void check_hyp_param(double b, const char* which) {
    if (b <= 0.0 && std::abs(b - std::round(b)) < 1e-14)
        fail(errc::domain, std::string("hyp1f2: parameter ") + which + " is a non-positive integer");
}

}  // namespace detail

inline cplx hyp1f2(double b1, double b2, cplx z) {
    detail::check_hyp_param(b1, "b1");
    detail::check_hyp_param(b2, "b2");
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) fail(errc::domain, "hyp1f2: non-finite argument");
    return detail::narrow(detail::hyp1f2_wide(b1, b2, detail::widen(z), 1e-17));
}

}  // namespace pairwave
