#include "core/auxfun.hpp"

#include <cmath>
#include <stdexcept>

#include "core/gammafn.hpp"
#include "core/quadrature.hpp"

namespace mx {

static const double LN10 = 2.302585092994045684;

// log(2 i n pi c^{-beta/2}) with the i kept as an explicit pi/2 phase
static cplx log_front(const AuxParams& p) {
    return cplx(std::log(2.0 * M_PI * p.n) - 0.5 * p.beta * std::log(p.c),
                M_PI / 2.0);
}

cplx L_estimate(const AuxParams& p) {
    return cplx(p.beta * std::log((double)p.n), 0.0) + log_front(p) -
           cplx(std::log((double)p.n), 0.0);
}

cplx log_e_function(const AuxParams& p, cplx z, Side side) {
    double n = p.n;
    cplx lz = log_cut(z, side);
    cplx lzm1 = log_cut(z - 1.0, side);
    // ((z-1)/z)^{(1-beta)/2}
    cplx t1 = 0.5 * (1.0 - p.beta) * (lzm1 - lz);
    // exp{-n int_0^1 log(z-x) dx}, closed form of the integral
    cplx t2 = -n * (z * lz - (z - 1.0) * lzm1 - 1.0);
    // prod_k (z - X_k) = Gamma(nz-beta/2+1) / (n^n Gamma(nz-beta/2-n+1))
    cplx arg = n * z - 0.5 * p.beta;
    cplx t3 = log_gamma(arg + 1.0) - n * std::log(n) - log_gamma(arg - n + 1.0);
    return t1 + t2 + t3;
}

AuxValues aux_values(const AuxParams& p, cplx z, Side side) {
    if (z == cplx(0.0, 0.0) || z == cplx(1.0, 0.0))
        throw std::domain_error("aux_values: pole at z=0 / z=1");
    AuxValues out;
    double n = p.n;
    cplx nz = n * z;
    cplx lg_plus = log_gamma(nz + 0.5 * p.beta);       // Gamma(nz+beta/2)
    cplx lg_minus = log_gamma(nz - 0.5 * p.beta + 1.0);  // Gamma(nz-beta/2+1)
    cplx front = log_front(p);
    cplx lz = log_cut(z, side);

    out.V = lg_minus - (1.0 - p.beta) * lz - lg_plus - front;
    out.W = lc_exp(front + lg_plus - lg_minus);
    out.H = lc_exp((p.beta - 1.0) * log_cut(z - 1.0, side) - out.V);
    out.H_tilde =
        lc_exp((p.beta - 1.0) * log_cut(1.0 - z, flip_side(side)) - out.V);

    cplx log_e = log_e_function(p, z, side);
    out.E = std::exp(log_e);
    // E~ = +i E e^{-i pi t} / (2 sin pi t) above the axis (t = nz - beta/2),
    // complex conjugate arrangement below; real z follows the side flag.
    bool upper = z.imag() > 0.0 || (z.imag() == 0.0 && side != Side::lower);
    cplx t = nz - 0.5 * p.beta;
    cplx s2 = 2.0 * std::sin(M_PI * t);
    cplx i_unit(0.0, 1.0);
    if (upper)
        out.E_tilde = i_unit * out.E * std::exp(-i_unit * M_PI * t) / s2;
    else
        out.E_tilde = -i_unit * out.E * std::exp(i_unit * M_PI * t) / s2;
    out.L = L_estimate(p);
    return out;
}

// ---- D(z) ----

namespace {

struct DIntegrand {
    double two_n_pi;
    double beta;
    cplx f1(double s) const {  // log(1 - e^{-2 n pi s - i pi beta})
        return std::log(1.0 - std::exp(cplx(-two_n_pi * s, -M_PI * beta)));
    }
    cplx f2(double s) const {
        return std::log(1.0 - std::exp(cplx(-two_n_pi * s, M_PI * beta)));
    }
    cplx f1_deriv(double s) const {
        cplx e = std::exp(cplx(-two_n_pi * s, -M_PI * beta));
        return two_n_pi * e / (1.0 - e);
    }
    cplx f2_deriv(double s) const {
        cplx e = std::exp(cplx(-two_n_pi * s, M_PI * beta));
        return two_n_pi * e / (1.0 - e);
    }
};

}  // namespace

cplx log_d_function(const AuxParams& p, cplx z, AxisLimit lim, double abs_tol) {
    if (z == cplx(0.0, 0.0)) throw std::domain_error("d_function: z = 0");
    DIntegrand F{2.0 * M_PI * p.n, p.beta};
    // truncate where e^{-2 n pi s} < 1e-30
    double s_max = 30.0 * LN10 / F.two_n_pi;
    const cplx i_unit(0.0, 1.0);

    if (z.real() != 0.0) {
        double S = s_max;
        cplx I = integrate(
            [&](double s) {
                return F.f1(s) / (s + i_unit * z) - F.f2(s) / (s - i_unit * z);
            },
            0.0, S, abs_tol);
        return I / (2.0 * M_PI * i_unit);
    }
    if (lim == AxisLimit::none)
        throw std::domain_error("d_function: on the contour, no side given");
    double y = z.imag();
    double pole = std::fabs(y);  // pole location in s for the singular term
    double S = std::max(s_max, 1.5 * pole + s_max);
    cplx I;
    if (y > 0.0) {
        // pole in the first term at s = y
        cplx fy = F.f1(y);
        cplx pv = integrate(
            [&](double s) {
                if (s == y) return F.f1_deriv(y);
                return (F.f1(s) - fy) / (s - y);
            },
            0.0, S, abs_tol);
        pv += fy * std::log((S - y) / y);
        cplx term1 = pv + (lim == AxisLimit::right ? -i_unit * M_PI * fy
                                                   : i_unit * M_PI * fy);
        cplx term2 =
            -integrate([&](double s) { return F.f2(s) / (s + y); }, 0.0, S,
                       abs_tol);
        I = term1 + term2;
    } else {
        // pole in the second term at s = -y
        cplx fp = F.f2(pole);
        cplx pv = integrate(
            [&](double s) {
                if (s == pole) return F.f2_deriv(pole);
                return (F.f2(s) - fp) / (s - pole);
            },
            0.0, S, abs_tol);
        pv += fp * std::log((S - pole) / pole);
        cplx term2 = -(pv + (lim == AxisLimit::right ? i_unit * M_PI * fp
                                                     : -i_unit * M_PI * fp));
        cplx term1 =
            integrate([&](double s) { return F.f1(s) / (s + pole); }, 0.0, S,
                      abs_tol);
        I = term1 + term2;
    }
    return I / (2.0 * M_PI * i_unit);
}

cplx d_function(const AuxParams& p, cplx z, AxisLimit lim, double abs_tol) {
    return std::exp(log_d_function(p, z, lim, abs_tol));
}

cplx g_tilde_prime(const AuxParams& p, const EqCtx& eq, cplx z, Side side) {
    const TurningPoints& tp = eq.tp;
    if (z.imag() == 0.0 && z.real() >= tp.a && z.real() <= tp.b)
        throw std::domain_error("g_tilde_prime: z on [a,b]");
    double n = p.n;
    double mid = 0.5 * (tp.a + tp.b), half = 0.5 * (tp.b - tp.a);
    auto v_prime = [&](double s) {
        return n * digamma(cplx(n * s + 1.0 - 0.5 * p.beta, 0.0)) -
               n * digamma(cplx(n * s + 0.5 * p.beta, 0.0)) -
               (1.0 - p.beta) / s;
    };
    // s = mid + half sin(theta) absorbs both endpoint square roots
    cplx I = integrate(
        [&](double th) {
            double ct = std::cos(th);
            double s = mid + half * std::sin(th);
            if (ct == 0.0) return cplx(0.0, 0.0);
            return v_prime(s) * (half * ct) * (half * ct) / (s - z);
        },
        -M_PI_2, M_PI_2, eq.quad_tol);
    cplx r = sqrt_cut(z - tp.a, side) * sqrt_cut(z - tp.b, side);
    return I / (2.0 * M_PI * r);
}

}  // namespace mx
