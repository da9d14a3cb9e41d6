#pragma once

#include <complex>

namespace pairwave {

using cplx = std::complex<double>;

}  // namespace pairwave
