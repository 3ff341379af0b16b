#include "core/formulas.hpp"

#include <cmath>
#include <stdexcept>

#include "core/airy.hpp"

namespace mx {

const char* formula_name(Formula f) {
    switch (f) {
        case Formula::O4: return "O4";
        case Formula::O1: return "O1";
        case Formula::O0l: return "O0l";
        case Formula::O0r: return "O0r";
        case Formula::Oa: return "Oa";
        case Formula::Ob: return "Ob";
        case Formula::O2: return "O2";
        case Formula::O3: return "O3";
    }
    return "?";
}

namespace {

struct Ctx {
    const AuxParams& p;
    EqCtx eq;
    cplx z;
    Side side;
    Region region;
    double n;
    double parity;  // (-1)^n
    cplx t;         // nz - beta/2, real part reduced mod 2
    cplx sin_pi_t, cos_pi_t;
    const EvalOptions& opt;

    Ctx(const AuxParams& p_, cplx z_, const Region& reg, const EvalOptions& o)
        : p(p_), eq(p_.c, o.quad_tol), z(z_), region(reg), opt(o) {
        side = side_for(reg);
        n = p.n;
        parity = (p.n % 2) ? -1.0 : 1.0;
        double tre = o.have_phase ? o.phase_red
                                  : std::fmod(n * z.real() - 0.5 * p.beta, 2.0);
        t = cplx(tre, n * z.imag());
        sin_pi_t = std::sin(M_PI * t);
        cos_pi_t = std::cos(M_PI * t);
    }

    cplx half_nvl() const {
        return 0.5 * n * (v_linear(p.c, z) + eq.lagrange_l());
    }
};

double clamped_exp(double x) { return std::exp(std::min(x, 50.0)); }

// The [1+O(1/n)] constant of the outer and band formulas is not uniform: it
// degrades like 1/|phi| near b and 1/|phi~| near a (the Airy formulas take
// over there). Fold that into the reported estimate.
double turning_penalty(cplx ph, cplx pht) {
    return 1.0 / std::max(std::abs(ph), 1e-8) +
           1.0 / std::max(std::abs(pht), 1e-8);
}

// ((p+q)^beta - (p-q)^beta) / (2q), stable for small q
cplx power_diff_ratio(cplx pp, cplx q, double beta) {
    if (std::abs(q) < 1e-4 * std::abs(pp)) {
        return beta * std::pow(pp, beta - 1.0) +
               beta * (beta - 1.0) * (beta - 2.0) / 6.0 *
                   std::pow(pp, beta - 3.0) * q * q;
    }
    return (std::pow(pp + q, beta) - std::pow(pp - q, beta)) / (2.0 * q);
}

AsymptoticResult eval_outer(Ctx& c) {
    const TurningPoints& tp = c.eq.tp;
    cplx g = g_function(c.eq, c.z, c.side);
    cplx sa = sqrt_cut(c.z - tp.a, c.side);
    cplx sb = sqrt_cut(c.z - tp.b, c.side);
    cplx expo = c.n * std::log(c.n) + c.n * g +
                0.5 * (1.0 - c.p.beta) * log_cut(c.z, c.side) +
                c.p.beta * std::log(0.5 * (sa + sb)) -
                0.25 * log_cut(c.z - tp.a, c.side) -
                0.25 * log_cut(c.z - tp.b, c.side);
    AsymptoticResult r;
    r.value = lc_exp(expo);
    cplx ph = c.half_nvl() / c.n - g;  // 2g + 2phi = v + l
    double sgn = c.side == Side::lower ? -1.0 : 1.0;
    cplx pht = ph + sgn * cplx(0.0, M_PI) * (cplx(1.0, 0.0) - c.z);
    r.err_estimate = (1.0 + turning_penalty(ph, pht)) / c.n;
    return r;
}

// Shared core of the strip formula: everything except the origin factor D.
// expo covers the smooth part including e^{-n phi~}; osc is the oscillatory
// -2 (-1)^n sin(pi t) factor.
void strip_core(Ctx& c, cplx& expo, cplx& osc, AsymptoticResult& r) {
    const TurningPoints& tp = c.eq.tp;
    Side fs = flip_side(c.side);
    cplx pht = phi_tilde(c.eq, c.z, c.side);
    cplx saz = sqrt_cut(tp.a - c.z, fs);
    cplx sbz = sqrt_cut(tp.b - c.z, fs);
    expo = c.n * std::log(c.n) + c.half_nvl() +
           0.5 * (1.0 - c.p.beta) * log_cut(c.z, c.side) +
           c.p.beta * std::log(0.5 * (sbz + saz)) -
           0.25 * log_cut(tp.a - c.z, fs) - 0.25 * log_cut(tp.b - c.z, fs) -
           c.n * pht;
    osc = -2.0 * c.parity * c.sin_pi_t;
    // dropped term O(n^beta e^{n Re phi}) measured against the kept
    // sin(pi t) e^{-n phi~}; on either side Re phi = Re phi~ - pi |Im z|
    double re_phi = pht.real() - M_PI * std::fabs(c.z.imag());
    double log_kept = std::log(std::abs(c.sin_pi_t)) - c.n * pht.real();
    double dropped =
        clamped_exp(c.p.beta * std::log(c.n) + c.n * re_phi - log_kept);
    double sgn = c.side == Side::lower ? -1.0 : 1.0;
    cplx ph = pht - sgn * cplx(0.0, M_PI) * (cplx(1.0, 0.0) - c.z);
    r.err_estimate = (1.0 + turning_penalty(ph, pht)) / c.n + dropped;
    if (std::abs(c.sin_pi_t) < 10.0 * r.err_estimate)
        r.cancellation_warning = true;
}

AsymptoticResult eval_strip_left(Ctx& c) {
    AsymptoticResult r;
    cplx expo, osc;
    strip_core(c, expo, osc, r);
    r.value = lc_mul_cplx(lc_exp(expo), osc);
    return r;
}

AsymptoticResult eval_origin_left(Ctx& c) {
    const TurningPoints& tp = c.eq.tp;
    Side fs = flip_side(c.side);
    cplx g = g_function(c.eq, c.z, c.side);
    AxisLimit lim = c.z.real() == 0.0 ? AxisLimit::left : AxisLimit::none;
    cplx D = d_function(c.p, c.z, lim, c.opt.quad_tol);
    cplx saz = sqrt_cut(tp.a - c.z, fs);
    cplx sbz = sqrt_cut(tp.b - c.z, fs);
    cplx expo = c.n * std::log(c.n) + c.n * g +
                0.5 * (1.0 - c.p.beta) * log_cut(-c.z, fs) +
                c.p.beta * std::log(0.5 * (sbz + saz)) -
                0.25 * log_cut(tp.b - c.z, fs) -
                0.25 * log_cut(tp.a - c.z, fs);
    AsymptoticResult r;
    r.value = lc_mul_cplx(lc_exp(expo), D);
    r.err_estimate = 1.0 / c.n;
    return r;
}

AsymptoticResult eval_origin_right(Ctx& c) {
    AsymptoticResult r;
    cplx expo, osc;
    strip_core(c, expo, osc, r);
    AxisLimit lim = c.z.real() == 0.0 ? AxisLimit::right : AxisLimit::none;
    cplx D = d_function(c.p, c.z, lim, c.opt.quad_tol);
    r.value = lc_mul_cplx(lc_exp(expo), osc * D);
    return r;
}

AsymptoticResult eval_airy_a(Ctx& c) {
    const TurningPoints& tp = c.eq.tp;
    Side fs = flip_side(c.side);
    cplx q = 0.5 * sqrt_cut(tp.a - c.z, fs);
    cplx pp = 0.5 * sqrt_cut(tp.b - c.z, fs);
    cplx Pp = std::pow(pp + q, c.p.beta);
    cplx Pm = std::pow(pp - q, c.p.beta);
    cplx Kt = F_tilde_ratio(c.eq, c.z, c.p.n, c.side);
    cplx Ft = Kt * (cplx(tp.a, 0.0) - c.z);
    AiryQuadC aq = airy_c(Ft);
    cplx K4 = std::pow(Kt, 0.25);
    cplx T = power_diff_ratio(pp, q, c.p.beta);
    cplx brA = c.cos_pi_t * aq.ai - c.sin_pi_t * aq.bi;
    cplx brB = c.cos_pi_t * aq.ai_prime - c.sin_pi_t * aq.bi_prime;
    cplx osc = c.parity * ((Pp + Pm) * K4 * brA + T / K4 * brB);
    cplx expo = c.n * std::log(c.n) + 0.5 * std::log(M_PI) + c.half_nvl() +
                0.5 * (1.0 - c.p.beta) * log_cut(c.z, c.side) -
                0.25 * log_cut(tp.b - c.z, fs);
    AsymptoticResult r;
    r.value = lc_mul_cplx(lc_exp(expo), osc);
    r.err_estimate = 1.0 / c.n;
    return r;
}

AsymptoticResult eval_airy_b(Ctx& c) {
    const TurningPoints& tp = c.eq.tp;
    cplx q = 0.5 * sqrt_cut(c.z - tp.b, c.side);
    cplx pp = 0.5 * sqrt_cut(c.z - tp.a, c.side);
    cplx Pp = std::pow(pp + q, c.p.beta);
    cplx Pm = std::pow(pp - q, c.p.beta);
    cplx K = F_ratio(c.eq, c.z, c.p.n, c.side);
    cplx F = K * (c.z - cplx(tp.b, 0.0));
    AiryQuadC aq = airy_c(F);
    cplx K4 = std::pow(K, 0.25);
    cplx T = power_diff_ratio(pp, q, c.p.beta);
    cplx osc = (Pp + Pm) * K4 * aq.ai - T / K4 * aq.ai_prime;
    cplx expo = c.n * std::log(c.n) + 0.5 * std::log(M_PI) + c.half_nvl() +
                0.5 * (1.0 - c.p.beta) * log_cut(c.z, c.side) -
                0.25 * log_cut(c.z - tp.a, c.side);
    AsymptoticResult r;
    r.value = lc_mul_cplx(lc_exp(expo), osc);
    r.err_estimate = 1.0 / c.n;
    return r;
}

// Band: the two trig forms of the same approximation. form selects which one
// is assembled; they are analytically identical.
AsymptoticResult eval_band(Ctx& c, Formula form) {
    const TurningPoints& tp = c.eq.tp;
    Side fs = flip_side(c.side);
    bool upper = c.side != Side::lower;
    cplx w = (2.0 * c.z - (tp.b + tp.a)) / (tp.b - tp.a);
    cplx u = std::acos(w);
    cplx i_unit(0.0, 1.0);
    cplx arg, ph, pht;
    cplx pi_shift = i_unit * M_PI * (cplx(1.0, 0.0) - c.z);
    double sgn = upper ? 1.0 : -1.0;
    double par;
    if (form == Formula::O2) {
        pht = phi_tilde(c.eq, c.z, c.side);
        ph = pht - sgn * pi_shift;
        cplx ut = M_PI - u;
        arg = M_PI * c.t + M_PI / 4.0 + 0.5 * c.p.beta * ut +
              (upper ? -1.0 : 1.0) * i_unit * c.n * pht;
        par = c.parity;
    } else {
        ph = phi(c.eq, c.z, c.side);
        pht = ph + sgn * pi_shift;
        arg = M_PI / 4.0 - 0.5 * c.p.beta * u +
              (upper ? -1.0 : 1.0) * i_unit * c.n * ph;
        par = 1.0;
    }
    cplx osc = 2.0 * par * std::cos(arg);
    cplx expo = c.n * std::log(c.n) + c.half_nvl() +
                0.5 * (1.0 - c.p.beta) * log_cut(c.z, c.side) +
                0.5 * c.p.beta * std::log(0.25 * (tp.b - tp.a)) -
                0.25 * log_cut(c.z - tp.a, c.side) -
                0.25 * log_cut(tp.b - c.z, fs);
    AsymptoticResult r;
    r.value = lc_mul_cplx(lc_exp(expo), osc);
    // dropped term O(n^{-1} e^{n |Re phi|}) against the kept cos
    double dropped = clamped_exp(c.n * std::fabs(ph.real()) - std::log(c.n) -
                                 std::log(std::abs(std::cos(arg))));
    r.err_estimate = (1.0 + turning_penalty(ph, pht)) / c.n + dropped;
    if (std::abs(std::cos(arg)) < 10.0 * r.err_estimate)
        r.cancellation_warning = true;
    return r;
}

Formula formula_for(RegionTag tag) {
    switch (tag) {
        case RegionTag::Outer: return Formula::O4;
        case RegionTag::StripLeft: return Formula::O1;
        case RegionTag::OriginLeft: return Formula::O0l;
        case RegionTag::OriginRight: return Formula::O0r;
        case RegionTag::AiryA: return Formula::Oa;
        case RegionTag::AiryB: return Formula::Ob;
        case RegionTag::BandLeft:
        case RegionTag::BandRight: return Formula::O3;
    }
    return Formula::O4;
}

void validate(const AuxParams& p) {
    if (!(p.c > 0.0 && p.c < 1.0)) throw std::domain_error("c must be in (0,1)");
    if (!(p.beta >= 1.0 && p.beta < 2.0))
        throw std::domain_error("beta must be in [1,2)");
    if (p.n < 1) throw std::domain_error("n must be >= 1");
}

}  // namespace

AsymptoticResult evaluate_with(const AuxParams& p, cplx z, Formula f,
                               const EvalOptions& opt) {
    validate(p);
    TurningPoints tp = turning_points(p.c);
    RegionConfig rc = RegionConfig::defaults(tp);
    double eps = opt.eps > 0.0 ? opt.eps : rc.eps;
    double delta = opt.delta > 0.0 ? opt.delta : rc.delta;
    if (!(eps < delta)) throw std::domain_error("eps must be < delta");
    Region reg = classify_region(z, eps, delta, tp);
    Ctx c(p, z, reg, opt);
    AsymptoticResult r;
    switch (f) {
        case Formula::O4: r = eval_outer(c); break;
        case Formula::O1: r = eval_strip_left(c); break;
        case Formula::O0l: r = eval_origin_left(c); break;
        case Formula::O0r: r = eval_origin_right(c); break;
        case Formula::Oa: r = eval_airy_a(c); break;
        case Formula::Ob: r = eval_airy_b(c); break;
        case Formula::O2: r = eval_band(c, Formula::O2); break;
        case Formula::O3: r = eval_band(c, Formula::O3); break;
    }
    if ((f == Formula::O3 || f == Formula::O2) && opt.band_cross_check) {
        AsymptoticResult other =
            eval_band(c, f == Formula::O3 ? Formula::O2 : Formula::O3);
        r.band_check_resid = rel_diff(r.value, other.value);
    }
    r.region = reg;
    r.formula = f;
    if (z.imag() == 0.0) {
        if (!lc_to_scaled_real(r.value, r.real_value, 1e-8))
            throw std::runtime_error(
                "imaginary residue on the real axis exceeds tolerance");
        r.is_real = true;
    }
    return r;
}

AsymptoticResult evaluate(const AuxParams& p, cplx z, const EvalOptions& opt) {
    validate(p);
    TurningPoints tp = turning_points(p.c);
    RegionConfig rc = RegionConfig::defaults(tp);
    double eps = opt.eps > 0.0 ? opt.eps : rc.eps;
    double delta = opt.delta > 0.0 ? opt.delta : rc.delta;
    if (!(eps < delta)) throw std::domain_error("eps must be < delta");
    Region reg = classify_region(z, eps, delta, tp);
    return evaluate_with(p, z, formula_for(reg.tag), opt);
}

}  // namespace mx
