#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gtest/gtest.h>

#include "pairwave/error.hpp"
#include "pairwave/trap.hpp"
#include "support/approx.hpp"

using namespace pairwave;
using pairwave::testing::close;

namespace {

const double pi = std::numbers::pi;
const gas_params unit = gas_params::with_coupling(1.0);

struct quadratic_reference {
    double mu, rc, zeta, zeta_e;
};

// Thomas–Fermi integrals of Ve = ε²x² done by hand, valid when the edge lies inside the ball.
quadratic_reference quadratic_closed_form(double eps, double volume, const gas_params& p) {
    const double c8 = p.eight_pi_a_rho();
    const double mu = std::pow(15.0 * p.a * p.rho0 * volume * eps * eps * eps, 0.4);
    const double rc = std::sqrt(mu) / eps;
    const double zeta = 4.0 * pi * mu * mu * std::pow(rc, 3) / (volume * c8 * c8) * 8.0 / 105.0;
    const double zeta_e = 4.0 * pi * eps * eps * mu * std::pow(rc, 5) / (volume * c8) * 2.0 / 35.0;
    return {mu, rc, zeta, zeta_e};
}

double gaussian_convolved(double r, double t, double sigma) {
    const double s2 = sigma * sigma + 4.0 * t;
    return std::pow(sigma * sigma / s2, 1.5) * std::exp(-r * r / (2.0 * s2));
}

position along_x(double x) { return {x, 0.0, 0.0}; }

}  // namespace

TEST(SolveTf, ConstantPotentialIsHomogeneous) {
    for (double v : {0.0, 0.7, -2.0}) {
        const auto s = solve_tf(trap_model::constant(v, 1e3, unit));
        for (double x : {0.0, 1.0, 5.0}) EXPECT_NEAR(s.phi0(along_x(x)), 1.0, 4 * std::numeric_limits<double>::epsilon());
        EXPECT_NEAR(s.zeta, 1.0, 1e-12);
        EXPECT_NEAR(s.zeta_e, v, 1e-12);
        EXPECT_NEAR(s.E, unit.four_pi_a_rho() + v, 1e-12);
    }
}

TEST(SolveTf, QuadraticMatchesClosedForm) {
    for (auto [eps, vol] : {std::pair{0.05, 1e5}, std::pair{0.2, 2e3}}) {
        const auto s = solve_tf(trap_model::quadratic(eps, vol, unit));
        const auto ref = quadratic_closed_form(eps, vol, unit);
        ASSERT_LT(ref.rc, s.model.ball_radius());
        EXPECT_TRUE(close(s.mu, ref.mu, 1e-10));
        EXPECT_TRUE(close(s.edge_radius, ref.rc, 1e-10));
        EXPECT_TRUE(close(s.zeta, ref.zeta, 1e-10));
        EXPECT_TRUE(close(s.zeta_e, ref.zeta_e, 1e-10));
        EXPECT_TRUE(close(s.E, s.mu - unit.four_pi_a_rho() * ref.zeta, 1e-10));
    }
}

TEST(SolveTf, Invariants) {
    const auto s = solve_tf(trap_model::quadratic(0.05, 1e5, unit), 1e-10);
    const auto c = check_tf(s);
    EXPECT_LT(c.normalization, 1e-8);
    EXPECT_LT(c.energy_relation, 1e-8);
    EXPECT_LT(c.edge_value, 1e-8);
    EXPECT_EQ(s.phi0(along_x(s.edge_radius * 1.001)), 0.0);
    EXPECT_LT(s.phi0(along_x(s.edge_radius * (1.0 - 1e-9))), 1e-4);
    EXPECT_FALSE(s.in_region(along_x(s.edge_radius * 1.01)));
    EXPECT_TRUE(s.in_region(along_x(s.edge_radius * 0.99)));
}

TEST(SolveTf, ProfileAnnihilatesTfEquation) {
    const auto s = solve_tf(trap_model::quadratic(0.05, 1e5, unit));
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> u(0.0, s.edge_radius);
    for (int i = 0; i < 100; ++i) EXPECT_LT(std::abs(s.residual(u(rng))), 1e-10);
}

TEST(SolveTf, Errors) {
    EXPECT_CODE(solve_tf(trap_model::quadratic(0.05, 0.0, unit)), errc::infeasible);
    EXPECT_CODE(solve_tf(trap_model::quadratic(0.05, 1e5, unit), 0.0), errc::domain);
    trap_model bumpy{[](double x) { return std::cos(x); }, 0.1, 1e4, unit, "custom"};
    EXPECT_CODE(solve_tf(bumpy), errc::config);
    trap_model missing;
    missing.volume = 1.0;
    EXPECT_CODE(solve_tf(missing), errc::config);
}

TEST(LocalScaling, QuarterDensityPoint) {
    const auto s = solve_tf(trap_model::quadratic(0.05, 1e5, unit));
    const double R = std::sqrt(s.mu - 0.25 * unit.eight_pi_a_rho()) / 0.05;
    EXPECT_NEAR(s.phi0(along_x(R)), 0.5, 1e-12);
    const auto pt = local_scaling(along_x(R), 2.0, 8.0, s);
    EXPECT_NEAR(pt.r_tilde, 1.0, 1e-11);
    EXPECT_NEAR(pt.tau, 2.0, 1e-11);
    EXPECT_NEAR(local_scaling(along_x(R), 2.0, 24.0, s).tau, 3.0 * pt.tau, 1e-11);
}

TEST(LocalScaling, UnitProfileIsHomogeneousScaling) {
    const auto s = solve_tf(trap_model::constant(0.0, 1e3, unit));
    const auto a = local_scaling(along_x(2.0), 3.0, 7.0, s);
    const auto b = scaled_point::from_physical(3.0, 7.0, unit);
    EXPECT_NEAR(a.r_tilde, b.r_tilde, 1e-14);
    EXPECT_NEAR(a.tau, b.tau, 1e-14);
}

TEST(LocalScaling, RegionErrors) {
    const auto s = solve_tf(trap_model::quadratic(0.05, 1e5, unit));
    EXPECT_CODE(local_scaling(along_x(s.edge_radius * 1.05), 1.0, 1.0, s), errc::region);
    EXPECT_CODE(local_scaling(along_x(s.edge_radius * 0.999), 1.0, 1.0, s), errc::region);
    EXPECT_CODE(local_scaling(along_x(0.0), 1.0, 0.0, s), errc::domain);
}

TEST(KhatSlow, Substitution) {
    const auto flat = solve_tf(trap_model::constant(0.3, 1e3, unit));
    const auto gauss = initial_data::gaussian(0.5, 1.0);
    EXPECT_TRUE(close(khat_slow(along_x(1.0), 1.2, 3.0, gauss, flat), khat_exact(1.2, 3.0, gauss, unit), 1e-14));
    const auto s = solve_tf(trap_model::quadratic(0.05, 1e5, unit));
    const position R = along_x(10.0);
    EXPECT_TRUE(close(khat_slow(R, 0.8, 0.0, gauss, s), gauss.transform(0.8), 1e-14));
    const double g = g0_hat(0.8, s.local_params(R));
    const auto steady = initial_data::from_transform([g](double) { return g; });
    EXPECT_TRUE(close(khat_slow(R, 0.8, 50.0, steady, s), g, 1e-14));
    EXPECT_CODE(khat_slow(along_x(s.edge_radius * 1.05), 0.8, 1.0, gauss, s), errc::region);
}

TEST(ExteriorKernel, ZeroData) {
    const auto s = solve_tf(trap_model::quadratic(0.05, 1e5, unit));
    for (double r : {0.0, 1.0, 10.0}) EXPECT_EQ(exterior_kernel(along_x(40.0), r, 5.0, initial_data::zero(), s), 0.0);
}

TEST(ExteriorKernel, GaussianConvolution) {
    const auto s = solve_tf(trap_model::quadratic(0.05, 1e5, unit));
    const double sigma = 1.3;
    const auto f = initial_data::gaussian(1.0, sigma);
    for (double t : {0.1, 1.0, 10.0})
        for (double r : {0.0, 0.5, 2.0, 6.0}) {
            const double want = gaussian_convolved(r, t, sigma);
            EXPECT_LT(std::abs(exterior_kernel(along_x(40.0), r, t, f, s) - want), 1e-8 * want) << r << " " << t;
        }
}

TEST(ExteriorKernel, MassConserved) {
    const auto s = solve_tf(trap_model::quadratic(0.05, 1e5, unit));
    const double sigma = 0.8;
    const auto f = initial_data::gaussian(1.0, sigma);
    const double mass = std::pow(2.0 * pi * sigma * sigma, 1.5);
    for (double t : {0.5, 5.0}) {
        const double m = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
            [&](double r) { return 4.0 * pi * r * r * exterior_kernel(along_x(40.0), r, t, f, s); }, 0.0,
            std::numeric_limits<double>::infinity(), 10, 1e-10);
        EXPECT_NEAR(m / mass, 1.0, 1e-6) << t;
    }
}

TEST(ExteriorKernel, SimilarityFormAtLateTimes) {
    const auto s = solve_tf(trap_model::quadratic(0.05, 1e5, unit));
    const double sigma = 1.0, t = 100.0;
    const auto f = initial_data::gaussian(1.0, sigma);
    for (double r : {10.0, 20.0, 30.0}) {
        const double v = exterior_kernel(along_x(40.0), r, t, f, s);
        EXPECT_NEAR(exterior_similarity(r, t, f) / v, 1.0, 0.02) << r;
    }
}

TEST(ExteriorKernel, DecaysInTime) {
    const auto s = solve_tf(trap_model::quadratic(0.05, 1e5, unit));
    const auto f = initial_data::gaussian(1.0, 1.0);
    double prev = INFINITY;
    for (double t = 0.5; t < 100.0; t *= 2.0) {
        double sup = 0.0;
        for (double r = 0.0; r < 60.0; r += 0.5) sup = std::max(sup, std::abs(exterior_kernel(along_x(40.0), r, t, f, s)));
        EXPECT_LT(sup, prev) << t;
        prev = sup;
    }
}

TEST(ExteriorKernel, Errors) {
    const auto s = solve_tf(trap_model::quadratic(0.05, 1e5, unit));
    const auto f = initial_data::gaussian(1.0, 1.0);
    EXPECT_CODE(exterior_kernel(along_x(1.0), 1.0, 1.0, f, s), errc::region);
    EXPECT_CODE(exterior_kernel(along_x(40.0), 1.0, 0.0, f, s), errc::domain);
    const initial_data wild{[](double x) { return std::exp(x * x); }, [](double) { return 0.0; }, false};
    EXPECT_CODE(exterior_kernel(along_x(40.0), 1.0, 1.0, wild, s), errc::data);
    const initial_data bad{[](double) { return NAN; }, [](double) { return 0.0; }, false};
    EXPECT_CODE(exterior_kernel(along_x(40.0), 1.0, 1.0, bad, s), errc::data);
    const auto transform_only = initial_data::from_transform([](double) { return 1.0; });
    EXPECT_CODE(exterior_kernel(along_x(40.0), 1.0, 1.0, transform_only, s), errc::data);
}

TEST(LambdaSlow, UnitProfileMatchesHomogeneous) {
    const auto flat = solve_tf(trap_model::constant(0.0, 1e3, unit));
    for (auto [r, t] : {std::pair{1.0, 50.0}, std::pair{30.0, 40.0}, std::pair{120.0, 50.0}}) {
        const cplx a = lambda_slow(along_x(2.0), r, t, flat);
        EXPECT_TRUE(close(a, lambda_asymptotic(scaled_point::from_physical(r, t, unit)), 1e-12)) << r;
    }
}

TEST(LambdaSlow, DependsOnPositionOnlyThroughProfile) {
    const auto s = solve_tf(trap_model::quadratic(0.05, 1e5, unit));
    const position a{12.0, 0.0, 0.0}, b{0.0, 0.0, -12.0}, c{0.0, 12.0 / std::sqrt(2.0), 12.0 / std::sqrt(2.0)};
    const cplx va = lambda_slow(a, 3.0, 60.0, s);
    EXPECT_EQ(va, lambda_slow(b, 3.0, 60.0, s));
    EXPECT_TRUE(close(lambda_slow(c, 3.0, 60.0, s), va, 1e-13));
}

TEST(LambdaSlow, SmallDistanceScale) {
    const auto s = solve_tf(trap_model::quadratic(0.05, 1e5, unit));
    const position R = along_x(15.0);
    const double g = s.local_params(R).g();
    const cplx v = lambda_slow(R, 1.0 / std::sqrt(g), 100.0 / g, s);
    EXPECT_NEAR(v.real() * 1e8 / (pi * pi / 120.0), 1.0, 0.02);
    slow_options o;
    o.method = slow_method::oracle;
    EXPECT_NEAR(lambda_slow(R, 1.0 / std::sqrt(g), 100.0 / g, s, o).real() * 1e8 / (pi * pi / 120.0), 1.0, 0.02);
}

TEST(LambdaSlow, MarginIsConfigurable) {
    const auto s = solve_tf(trap_model::quadratic(0.05, 1e5, unit));
    const double R = std::sqrt(s.mu - 0.03 * s.mu) / 0.05;  // φ0² at 3% of its maximum
    EXPECT_CODE(lambda_slow(along_x(R), 1.0, 50.0, s), errc::region);
    slow_options o;
    o.margin = 0.01;
    EXPECT_NO_THROW(lambda_slow(along_x(R), 1.0, 50.0, s, o));
}
