#include "core/equilibrium.hpp"

#include <cmath>

#include "core/quadrature.hpp"

namespace mx {

TurningPoints turning_points(double c) {
    if (!(c > 0.0 && c < 1.0)) throw std::domain_error("c must be in (0,1)");
    double s = std::sqrt(c);
    return TurningPoints{(1.0 - s) / (1.0 + s), (1.0 + s) / (1.0 - s)};
}

double rho(double x, const TurningPoints& tp) {
    if (x < 0.0 || x > tp.b) throw std::domain_error("rho: x outside [0,b]");
    if (x <= tp.a) return 1.0;
    double t = (x * (tp.b + tp.a) - 2.0) / (x * (tp.b - tp.a));
    if (t > 1.0) {
        if (t > 1.0 + 1e-12) throw std::domain_error("rho: arccos argument out of range");
        t = 1.0;
    }
    if (t < -1.0) {
        if (t < -1.0 - 1e-12) throw std::domain_error("rho: arccos argument out of range");
        t = -1.0;
    }
    return std::acos(t) / M_PI;
}

cplx log_cut(cplx z, Side side) {
    if (z.imag() == 0.0 && z.real() < 0.0) {
        double s = (side == Side::lower) ? -1.0 : 1.0;
        return cplx(std::log(-z.real()), s * M_PI);
    }
    return std::log(z);
}

cplx sqrt_cut(cplx z, Side side) {
    if (z.imag() == 0.0 && z.real() < 0.0) {
        double s = (side == Side::lower) ? -1.0 : 1.0;
        return cplx(0.0, s * std::sqrt(-z.real()));
    }
    return std::sqrt(z);
}

cplx pow_cut(cplx z, double p, Side side) {
    if (z == cplx(0.0, 0.0)) return cplx(0.0, 0.0);
    return std::exp(p * log_cut(z, side));
}

Side flip_side(Side s) {
    if (s == Side::none) return Side::none;
    return s == Side::lower ? Side::upper : Side::lower;
}

static cplx r_branch(cplx z, const TurningPoints& tp, Side side) {
    return sqrt_cut(z - tp.a, side) * sqrt_cut(z - tp.b, side);
}

cplx g_prime(cplx z, double c, const TurningPoints& tp, Side side) {
    double d = std::min(std::abs(z - cplx(tp.a, 0)), std::abs(z - cplx(tp.b, 0)));
    // exactly at a turning point the radical vanishes and the form is clean;
    // just off it the square roots cancel catastrophically
    if (d != 0.0 && d < 1e-10)
        throw std::domain_error("g_prime: too close to a branch point");
    cplx arg = (z * (tp.b + tp.a) - 2.0 + 2.0 * r_branch(z, tp, side)) / (z * (tp.b - tp.a));
    return -log_cut(arg, side) + 0.5 * (-std::log(c));
}

EqCtx::EqCtx(double c_, double quad_tol_) : c(c_), tp(turning_points(c_)), quad_tol(quad_tol_) {}

double EqCtx::lagrange_l() const { return 2.0 * std::log((tp.b - tp.a) / 4.0) - 2.0; }

cplx v_linear(double c, cplx z) { return -z * std::log(c); }

// phi'(s) for s strictly inside one half-plane (principal branches are safe
// there; Im phi' stays inside (-pi, pi)).
static cplx phi_deriv(cplx s, const TurningPoints& tp) {
    cplx arg = (s * (tp.b + tp.a) - 2.0 + 2.0 * std::sqrt(s - tp.a) * std::sqrt(s - tp.b)) /
               (s * (tp.b - tp.a));
    return std::log(arg);
}

// real integrand of phi on (b, infinity)
static double phi_deriv_above_b(double s, const TurningPoints& tp) {
    double r = std::sqrt((s - tp.a) * (s - tp.b));
    return std::log((s * (tp.b + tp.a) - 2.0 + 2.0 * r) / (s * (tp.b - tp.a)));
}

// band phase density: arg of phi'_+ on (a,b)
static double band_arccos(double s, const TurningPoints& tp) {
    double t = (s * (tp.b + tp.a) - 2.0) / (s * (tp.b - tp.a));
    t = std::max(-1.0, std::min(1.0, t));
    return std::acos(t);
}

// real phi-tilde integrand on (0, a)
static double phi_tilde_deriv_real(double s, const TurningPoints& tp) {
    double r = std::sqrt((tp.a - s) * (tp.b - s));
    return std::log((2.0 - s * (tp.b + tp.a) + 2.0 * r) / (s * (tp.b - tp.a)));
}

static cplx integrate_segment(const EqCtx& eq, cplx from, cplx to) {
    cplx d = to - from;
    return integrate(
        [&](double t) { return phi_deriv(from + t * d, eq.tp) * d; },
        0.0, 1.0, eq.quad_tol);
}

static double band_B(const EqCtx& eq, double x) {
    // B(x) = int_x^b arccos(...) ds >= 0, so phi_+(x) = -i B(x)
    return integrate_real([&](double s) { return band_arccos(s, eq.tp); }, x, eq.tp.b,
                          eq.quad_tol);
}

static double phi_tilde_on_0a(const EqCtx& eq, double x) {
    return integrate_real([&](double s) { return phi_tilde_deriv_real(s, eq.tp); }, eq.tp.a, x,
                          eq.quad_tol);
}

cplx phi(const EqCtx& eq, cplx z, Side side) {
    const TurningPoints& tp = eq.tp;
    if (z.imag() == 0.0) {
        double x = z.real();
        if (x >= tp.b)
            return cplx(integrate_real([&](double s) { return phi_deriv_above_b(s, tp); }, tp.b,
                                       x, eq.quad_tol),
                        0.0);
        if (x > tp.a) {
            double sgn = (side == Side::lower) ? 1.0 : -1.0;
            return cplx(0.0, sgn * band_B(eq, x));
        }
        if (x > 0.0) {
            double sgn = (side == Side::lower) ? 1.0 : -1.0;
            return cplx(phi_tilde_on_0a(eq, x), sgn * M_PI * (1.0 - x));
        }
        throw std::domain_error("phi: real z <= 0 is on the cut; use g_function");
    }
    if (z.real() < tp.b && std::fabs(z.imag()) <= 1e-3) {
        // near-cut target: axis-parallel detour to keep the path off (-inf, b]
        double Y = (z.imag() > 0 ? 1.0 : -1.0) * std::max(eq.detour_im, 0.5);
        cplx p1(tp.b, Y), p2(z.real(), Y);
        return integrate_segment(eq, cplx(tp.b, 0.0), p1) + integrate_segment(eq, p1, p2) +
               integrate_segment(eq, p2, z);
    }
    return integrate_segment(eq, cplx(tp.b, 0.0), z);
}

cplx phi_tilde(const EqCtx& eq, cplx z, Side side) {
    if (z.imag() == 0.0) {
        double x = z.real();
        if (x > 0.0 && x <= eq.tp.a) return cplx(phi_tilde_on_0a(eq, x), 0.0);
        // boundary value via phi; the upper/lower relation with phi is exact
        double sgn = (side == Side::lower) ? -1.0 : 1.0;
        return phi(eq, z, side) + cplx(0.0, sgn * M_PI) * (1.0 - z);
    }
    double sgn = z.imag() > 0.0 ? 1.0 : -1.0;
    return phi(eq, z, side) + cplx(0.0, sgn * M_PI) * (1.0 - z);
}

// int_0^a log(z - s) ds, side-consistent closed form
static cplx saturated_log_integral(cplx z, double A, Side side) {
    auto anti = [&](cplx w) -> cplx {  // w = z - s at the endpoint
        if (w == cplx(0.0, 0.0)) return cplx(0.0, 0.0);
        return -w * (log_cut(w, side) - 1.0);
    };
    return anti(z - A) - anti(z);
}

cplx g_function(const EqCtx& eq, cplx z, Side side) {
    const TurningPoints& tp = eq.tp;
    if (z.imag() == 0.0 && z.real() <= 0.0) {
        double x = z.real();
        double sat = ((tp.a - x) * (std::log(tp.a - x) - 1.0)) -
                     (x == 0.0 ? 0.0 : (-x) * (std::log(-x) - 1.0));
        double band = integrate_real(
            [&](double s) { return std::log(s - x) * rho(s, tp); }, tp.a, tp.b, eq.quad_tol);
        double sgn = (side == Side::lower) ? -1.0 : 1.0;
        return cplx(sat + band, sgn * M_PI);
    }
    cplx vl = 0.5 * (v_linear(eq.c, z) + eq.lagrange_l());
    return vl - phi(eq, z, side);
}

cplx g_direct(const EqCtx& eq, cplx z, Side side) {
    const TurningPoints& tp = eq.tp;
    cplx sat = saturated_log_integral(z, tp.a, side);
    cplx band;
    if (z.imag() == 0.0 && z.real() > tp.a && z.real() < tp.b) {
        double x = z.real();
        auto f = [&](double s) { return log_cut(cplx(x - s, 0.0), side) * rho(s, tp); };
        band = integrate(f, tp.a, x, eq.quad_tol) + integrate(f, x, tp.b, eq.quad_tol);
    } else {
        band = integrate([&](double s) { return log_cut(z - s, side) * rho(s, tp); }, tp.a,
                         tp.b, eq.quad_tol);
    }
    return sat + band;
}

cplx F_ratio(const EqCtx& eq, cplx z, int n, Side side) {
    const TurningPoints& tp = eq.tp;
    double h_limit = 4.0 / (3.0 * tp.b * std::sqrt(tp.b - tp.a));
    cplx h;
    if (std::abs(z - cplx(tp.b, 0.0)) < 1e-6) {
        h = h_limit;
    } else {
        h = phi(eq, z, side) / pow_cut(z - tp.b, 1.5, side);
    }
    double k0 = std::pow(1.5 * n, 2.0 / 3.0);
    return k0 * std::pow(h, 2.0 / 3.0);
}

cplx F_map(const EqCtx& eq, cplx z, int n, Side side) {
    return F_ratio(eq, z, n, side) * (z - cplx(eq.tp.b, 0.0));
}

cplx F_tilde_ratio(const EqCtx& eq, cplx z, int n, Side side) {
    const TurningPoints& tp = eq.tp;
    double h_limit = 4.0 / (3.0 * tp.a * std::sqrt(tp.b - tp.a));
    cplx h;
    if (std::abs(z - cplx(tp.a, 0.0)) < 1e-6) {
        h = h_limit;
    } else {
        h = -phi_tilde(eq, z, side) / pow_cut(cplx(tp.a, 0.0) - z, 1.5, flip_side(side));
    }
    double k0 = std::pow(1.5 * n, 2.0 / 3.0);
    return k0 * std::pow(h, 2.0 / 3.0);
}

cplx F_tilde_map(const EqCtx& eq, cplx z, int n, Side side) {
    return F_tilde_ratio(eq, z, n, side) * (cplx(eq.tp.a, 0.0) - z);
}

}  // namespace mx
