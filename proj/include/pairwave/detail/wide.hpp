#pragma once

// __float128 helpers for the power series that cancel catastrophically in double.

#include <complex>
#include <quadmath.h>

namespace pairwave::detail {

using wreal = __float128;
using wcomplex = std::complex<wreal>;

inline wreal wpi() { return acosq(wreal(-1)); }

inline wcomplex widen(std::complex<double> z) { return {wreal(z.real()), wreal(z.imag())}; }
inline std::complex<double> narrow(wcomplex z) { return {double(z.real()), double(z.imag())}; }

inline wreal wabs(wcomplex z) { return hypotq(z.real(), z.imag()); }
inline wreal wabs(wreal x) { return fabsq(x); }

inline __complex128 to_c128(wcomplex z) {
    __complex128 c;
    __real__ c = z.real();
    __imag__ c = z.imag();
    return c;
}
inline wcomplex from_c128(__complex128 c) { return {crealq(c), cimagq(c)}; }

inline wcomplex wlog(wcomplex z) { return from_c128(clogq(to_c128(z))); }
inline wcomplex wexp(wcomplex z) { return from_c128(cexpq(to_c128(z))); }
inline wcomplex wsqrt(wcomplex z) { return from_c128(csqrtq(to_c128(z))); }

// Principal power z^p.
inline wcomplex wpow(wcomplex z, wreal p) { return wexp(p * wlog(z)); }

inline wcomplex wexp_i(wreal phase) { return {cosq(phase), sinq(phase)}; }

}  // namespace pairwave::detail
