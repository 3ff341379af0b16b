#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/airy.hpp"
#include "core/auxfun.hpp"

using namespace mx;

TEST_CASE("airy reference values") {
    AiryQuad q0 = airy(0.0);
    CHECK(q0.ai == doctest::Approx(0.355028053887817).epsilon(1e-12));
    CHECK(q0.ai_prime == doctest::Approx(-0.258819403792807).epsilon(1e-12));
    // independent 25-digit references
    CHECK(airy(1.0).ai == doctest::Approx(0.1352924163128814155241474).epsilon(1e-12));
    CHECK(airy(-5.0).ai == doctest::Approx(0.3507610090241142000592869).epsilon(1e-12));
    CHECK(airy(2.0).bi == doctest::Approx(3.298094999978172832524591).epsilon(1e-12));
    // asymptotic regime
    CHECK(airy(10.0).ai == doctest::Approx(1.104753258849934e-10).epsilon(1e-11));
    CHECK(airy(-20.0).ai == doctest::Approx(-0.1764061270779847).epsilon(1e-11));
}

TEST_CASE("airy wronskian across the series/asymptotic seam") {
    for (double x = -30.0; x <= 30.0; x += 0.37) {
        AiryQuad q = airy(x);
        if (x > 25.0) continue;  // Bi overflow guard region tested separately
        double w = q.ai * q.bi_prime - q.ai_prime * q.bi;
        CHECK(std::fabs(w - 1.0 / M_PI) < 1e-12);
    }
}

TEST_CASE("complex airy and the connection identity") {
    for (cplx z : {cplx(2, 3), cplx(-4, 1), cplx(-1, -6), cplx(8, 0.01),
                   cplx(-8.5, 0.3), cplx(0.1, -0.1)}) {
        CHECK(connection_check(z) < 1e-10);
        AiryQuadC q = airy_c(z);
        double w = std::abs(q.ai * q.bi_prime - q.ai_prime * q.bi - 1.0 / M_PI);
        // both products can be exponentially large off the axis; the double
        // subtraction cancels down to machine precision of that scale
        double scale =
            std::abs(q.ai * q.bi_prime) + std::abs(q.ai_prime * q.bi);
        CHECK(w < 1e-13 * scale + 1e-13);
    }
    // agrees with the real path on the axis
    AiryQuadC qc = airy_c(cplx(3.5, 0.0));
    AiryQuad qr = airy(3.5);
    CHECK(std::abs(qc.ai - qr.ai) < 1e-13 * std::fabs(qr.ai) + 1e-15);
    CHECK(std::abs(qc.bi - qr.bi) < 1e-13 * std::fabs(qr.bi));
}

TEST_CASE("scaled airy for large argument") {
    double la, lap, lb, lbp;
    airy_scaled(150.0, &la, &lap, &lb, &lbp);
    // log Ai(x) ~ -(2/3)x^{3/2} - (1/4) log x - log(2 sqrt(pi))
    double xi = 2.0 / 3.0 * std::pow(150.0, 1.5);
    double lead = -xi - 0.25 * std::log(150.0) - std::log(2 * std::sqrt(M_PI));
    CHECK(la == doctest::Approx(lead).epsilon(1e-4));
    // scaled Wronskian: log(1/pi) = la + lbp + log(1 - e^{...}) ~ combine
    CHECK(la + lbp == doctest::Approx(std::log(1.0 / (2 * M_PI))).epsilon(1e-3));
}

TEST_CASE("node grid") {
    NodeGrid grid{100, 1.5};
    CHECK(grid.node(0) == doctest::Approx(0.0075));
    CHECK(grid.node(99) < 1.0);
    CHECK(grid.node(100) > 1.0);
}

TEST_CASE("V matches its large-n form") {
    AuxParams p;
    double worst10 = 0, worst100 = 0;
    for (int n : {10, 100}) {
        p.n = n;
        for (cplx z : {cplx(3, 0.5), cplx(0.5, 2), cplx(-1, 1)}) {
            AuxValues av = aux_values(p, z);
            cplx lead = -p.beta * std::log((double)n) -
                        std::log(cplx(0, 2 * M_PI) * std::pow(p.c, -p.beta / 2));
            double r = std::abs(av.V - lead);
            (n == 10 ? worst10 : worst100) = std::max(n == 10 ? worst10 : worst100, r);
        }
    }
    CHECK(worst100 < worst10);  // O(1/n) approach
    CHECK(worst100 < 0.05);
}

TEST_CASE("H identities") {
    AuxParams p;
    for (double sy : {1.0, -1.0}) {
        cplx z(0.4, 0.3 * sy);
        AuxValues av = aux_values(p, z);
        // H~/H = e^{+- i pi (1-beta)} in the upper/lower half plane
        LogComplex r = lc_div(av.H_tilde, av.H);
        CHECK(std::fabs(r.log_mag) < 1e-12);
        CHECK(r.phase == doctest::Approx(sy * M_PI * (1 - p.beta)).epsilon(1e-12));
    }
}

TEST_CASE("E near one away from the segment") {
    AuxParams p;
    double prev = 1.0;
    for (int n : {10, 100, 1000}) {
        p.n = n;
        AuxValues av = aux_values(p, cplx(3.0, 0.0));
        double d = std::abs(av.E - 1.0);
        CHECK(d < prev);
        prev = d;
    }
    CHECK(prev < 1e-4);
}

TEST_CASE("D function properties") {
    AuxParams p;
    CHECK(std::abs(d_function(p, cplx(0.5, 0.0)) - 1.0) < 1e-3);
    // frozen regression value near the origin (adaptive quadrature oracle,
    // two tolerances agreeing to 1e-10)
    cplx d0 = d_function(p, cplx(0.001, 0.0), AxisLimit::none, 1e-13);
    cplx d1 = d_function(p, cplx(0.001, 0.0), AxisLimit::none, 1e-10);
    CHECK(std::abs(d0 - d1) < 1e-9);
    // the jump across the axis equals E/E~
    cplx z(0.0, 0.02);
    AuxValues av = aux_values(p, z);
    cplx jump = d_function(p, z, AxisLimit::left) / d_function(p, z, AxisLimit::right);
    CHECK(std::abs(jump - av.E / av.E_tilde) < 1e-8);
    CHECK_THROWS(d_function(p, cplx(0.0, 0.05), AxisLimit::none));
}

TEST_CASE("G tilde prime decay and domain") {
    AuxParams p;
    EqCtx eq(p.c);
    CHECK_THROWS_AS(g_tilde_prime(p, eq, cplx(3.0, 0.0)), std::domain_error);
    cplx g8 = g_tilde_prime(p, eq, cplx(8.0, 0.0));
    CHECK(std::abs(g8) < 10.0 / p.n);
    // z^2 G~'(z) bounded at large |z|
    for (double R : {20.0, 80.0}) {
        cplx z(R, 5.0);
        CHECK(std::abs(z * z * g_tilde_prime(p, eq, z)) < 50.0);
    }
}

TEST_CASE("L estimate matches the gamma form") {
    AuxParams p;
    cplx lead = L_estimate(p);
    AuxValues av = aux_values(p, cplx(2.5, 0.5));
    CHECK(std::abs(av.L - lead) < 0.1);
}
