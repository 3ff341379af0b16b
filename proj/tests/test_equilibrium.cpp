#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "core/equilibrium.hpp"
#include "core/quadrature.hpp"

using namespace mx;

TEST_CASE("turning points") {
    TurningPoints tp = turning_points(0.5);
    double s = std::sqrt(0.5);
    CHECK(tp.a == doctest::Approx((1 - s) / (1 + s)).epsilon(1e-15));
    CHECK(tp.b == doctest::Approx((1 + s) / (1 - s)).epsilon(1e-15));
    CHECK(tp.a * tp.b == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(turning_points(0.0), std::domain_error);
    CHECK_THROWS_AS(turning_points(1.0), std::domain_error);
}

TEST_CASE("density integrates to one and saturates left of a") {
    EqCtx eq(0.5);
    const TurningPoints& tp = eq.tp;
    CHECK(rho(tp.a / 2, tp) == doctest::Approx(1.0));
    double band =
        integrate_real([&](double x) { return rho(x, tp); }, tp.a, tp.b, 1e-13);
    CHECK(tp.a + band == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("g prime closed form") {
    EqCtx eq(0.5);
    const TurningPoints& tp = eq.tp;
    // z g'(z) -> 1 at infinity
    for (double R : {1e3, 1e5}) {
        cplx z(R, R / 3);
        CHECK(std::abs(z * g_prime(z, 0.5, tp) - 1.0) < 10.0 / R);
    }
    // at z=b the log argument collapses to 1
    CHECK(g_prime(cplx(tp.b, 0.0), 0.5, tp).real() ==
          doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-12));
    // jump on (0,a)
    cplx d = g_prime(cplx(tp.a / 2, 0), 0.5, tp, Side::upper) -
             g_prime(cplx(tp.a / 2, 0), 0.5, tp, Side::lower);
    CHECK(std::abs(d + cplx(0, 2 * M_PI)) < 1e-12);
}

TEST_CASE("phi boundary structure") {
    EqCtx eq(0.5);
    const TurningPoints& tp = eq.tp;
    CHECK(std::abs(phi(eq, cplx(tp.b, 0.0))) < 1e-12);
    // purely imaginary, conjugate boundary values inside the band
    cplx up = phi(eq, cplx(2.0, 0.0), Side::upper);
    cplx dn = phi(eq, cplx(2.0, 0.0), Side::lower);
    CHECK(std::fabs(up.real()) < 1e-11);
    CHECK(std::abs(up + dn) < 1e-11);
    // local expansion at b
    double e = 1e-3;
    double lead = 4.0 * std::pow(e, 1.5) / (3.0 * tp.b * std::sqrt(tp.b - tp.a));
    CHECK(std::fabs(phi(eq, cplx(tp.b + e, 0)).real() - lead) < 1e-5 * lead + 1e-9);
    // mirror expansion at a for phi-tilde
    double leada =
        4.0 * std::pow(e, 1.5) / (3.0 * tp.a * std::sqrt(tp.b - tp.a));
    // next-order coefficient is a bit above one, so allow a few parts in 1e3
    CHECK(std::fabs(phi_tilde(eq, cplx(tp.a - e, 0)).real() + leada) <
          3e-3 * leada);
}

TEST_CASE("g function and the direct integral agree") {
    EqCtx eq(0.5);
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> ur(-6.0, 9.0), ui(0.05, 3.0);
    double l = eq.lagrange_l();
    for (int k = 0; k < 25; ++k) {
        cplx z(ur(rng), ui(rng) * (k % 2 ? -1 : 1));
        cplx lhs = g_function(eq, z);
        cplx rhs = g_direct(eq, z);
        CHECK(std::abs(lhs - rhs) < 1e-9);
        cplx resid = 2.0 * rhs + 2.0 * phi(eq, z) - v_linear(eq.c, z) - l;
        CHECK(std::abs(resid) < 1e-9);
    }
    // real z < 0: the unit-mass measure sits entirely to the right, so the
    // boundary value picks up a full i*pi; the two sides are conjugate
    cplx gp1 = g_function(eq, cplx(-1.0, 0.0), Side::upper);
    cplx gm1 = g_function(eq, cplx(-1.0, 0.0), Side::lower);
    CHECK(std::fabs(gp1.imag() - M_PI) < 1e-10);
    CHECK(std::abs(gp1 - std::conj(gm1)) < 1e-10);
}

TEST_CASE("airy map normalization at the turning points") {
    EqCtx eq(0.5);
    const TurningPoints& tp = eq.tp;
    int n = 100;
    // F(z)/(z-b) and F~(z)/(a-z) approach the cube-root rates
    double kb = std::pow(1.5 * n * 4.0 / (3.0 * tp.b * std::sqrt(tp.b - tp.a)),
                         2.0 / 3.0);
    double ka = std::pow(1.5 * n * 4.0 / (3.0 * tp.a * std::sqrt(tp.b - tp.a)),
                         2.0 / 3.0);
    CHECK(std::abs(F_ratio(eq, cplx(tp.b, 0), n) - kb) < 1e-6 * kb);
    CHECK(std::abs(F_tilde_ratio(eq, cplx(tp.a, 0), n) - ka) < 1e-6 * ka);
    // F is real and increasing through zero along the axis
    double fm = F_map(eq, cplx(tp.b - 0.01, 0), n).real();
    double fp = F_map(eq, cplx(tp.b + 0.01, 0), n).real();
    CHECK(fm < 0.0);
    CHECK(fp > 0.0);
    CHECK(std::fabs(F_map(eq, cplx(tp.b - 0.01, 0), n).imag()) < 1e-9);
}

TEST_CASE("side-selected branches against offset limits") {
    // explicit boundary values match z +- i*1e-9 evaluations to ~1e-8
    for (double x : {-2.0, -0.3}) {
        cplx up = log_cut(cplx(x, 0), Side::upper);
        cplx lim = std::log(cplx(x, 1e-9));
        CHECK(std::abs(up - lim) < 1e-8);
        cplx dn = sqrt_cut(cplx(x, 0), Side::lower);
        cplx lims = std::sqrt(cplx(x, -1e-9));
        CHECK(std::abs(dn - lims) < 1e-8);
    }
    CHECK(flip_side(Side::upper) == Side::lower);
    CHECK(flip_side(Side::lower) == Side::upper);
    CHECK(flip_side(Side::none) == Side::none);
}
