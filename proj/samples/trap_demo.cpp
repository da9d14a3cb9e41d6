// Thomas-Fermi profile of a quadratic trap and the local Λ at a few interior points.

#include <cstdio>

#include "pairwave/trap.hpp"

int main() {
    using namespace pairwave;
    const auto tf = solve_tf(trap_model::quadratic(0.05, 1e5, gas_params::with_coupling(1.0)));
    std::printf("E = %.10f  zeta = %.10f  zeta_e = %.10f  edge radius = %.6f\n", tf.E, tf.zeta, tf.zeta_e, tf.edge_radius);
    for (double R : {0.0, 10.0, 20.0, 25.0, 26.5}) {
        const position x{R, 0.0, 0.0};
        std::printf("R = %5.1f  phi0 = %.6f", R, tf.phi0(x));
        try {
            const cplx l = lambda_slow(x, 2.0, 100.0, tf);
            std::printf("  Lambda(r=2, t=100) = %.6e%+.6ei\n", l.real(), l.imag());
        } catch (const error& e) {
            std::printf("  (%s)\n", e.what());
        }
    }
}
