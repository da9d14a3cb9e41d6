// Λ(r̃, τ) along r̃ at fixed τ: asymptotic series against the contour-quadrature oracle.

#include <cstdio>

#include "pairwave/asymptotics.hpp"
#include "pairwave/homogeneous.hpp"

int main() {
    using namespace pairwave;
    const double tau = 50.0;
    std::printf("%8s %6s %24s %24s %9s\n", "r_tilde", "region", "asymptotic", "oracle", "rel.err");
    for (double r : {1.0, 10.0, 25.0, 60.0, 96.0, 120.0, 150.0}) {
        const scaled_point pt{r, tau};
        const cplx a = lambda_asymptotic(pt);
        const cplx o = lambda_oracle(pt);
        std::printf("%8.2f %6s %11.4e%+11.4ei %11.4e%+11.4ei %9.2e\n", r, region_profile(pt).c_str(), a.real(), a.imag(),
                    o.real(), o.imag(), std::abs(a - o) / std::abs(o));
    }
}
