#include "core/airy.hpp"

#include <gmpxx.h>

#include <array>
#include <cmath>

namespace mx {

namespace {

using cplx = std::complex<double>;

// Ai(0), Ai'(0), sqrt(3) to 45 digits: inside the series region the basis
// functions grow like e^{xi} while Ai ~ e^{-xi}, so the constants (and the
// summation) need far more headroom than the 1e-12 target suggests.
const char* AI0_STR = "0.355028053887817239260063186004183176397979174";
const char* AIP0_STR = "-0.258819403792806798405183560189203963479091138";
const char* SQRT3_STR = "1.732050807568877293527446341505872366942805254";
constexpr double SQRT_PI = 1.7724538509055160273;
constexpr double SERIES_RADIUS = 9.0;
constexpr int MPF_PREC = 256;

// u_k, v_k of the large-argument expansions:
// u_0 = 1, u_k = u_{k-1} (6k-1)(6k-5)/(72k), v_k = u_k (6k+1)/(1-6k)
struct UVCoef {
    std::array<double, 26> u{}, v{};
    UVCoef() {
        u[0] = v[0] = 1.0;
        for (int k = 1; k < 26; ++k) {
            u[k] = u[k - 1] * (6.0 * k - 1.0) * (6.0 * k - 5.0) / (72.0 * k);
            v[k] = u[k] * (6.0 * k + 1.0) / (1.0 - 6.0 * k);
        }
    }
};
const UVCoef uv;

// Minimal complex arithmetic over mpf for the series region.
struct CMpf {
    mpf_class re, im;
    CMpf() : re(0, MPF_PREC), im(0, MPF_PREC) {}
    CMpf(double r, double i) : re(r, MPF_PREC), im(i, MPF_PREC) {}
};

static void cmpf_mul(CMpf& t, const CMpf& z) {
    mpf_class r(t.re * z.re - t.im * z.im, MPF_PREC);
    mpf_class i(t.re * z.im + t.im * z.re, MPF_PREC);
    t.re = r;
    t.im = i;
}

static void cmpf_div_ui(CMpf& t, unsigned long d) {
    t.re /= d;
    t.im /= d;
}

static void cmpf_add(CMpf& s, const CMpf& t) {
    s.re += t.re;
    s.im += t.im;
}

static double cmpf_mag(const CMpf& t) {
    return std::fabs(t.re.get_d()) + std::fabs(t.im.get_d());
}

static cplx cmpf_to_cplx(const CMpf& t) {
    return cplx(t.re.get_d(), t.im.get_d());
}

// Maclaurin series of the ODE basis f, g (y'' = z y, f(0)=1 f'(0)=0,
// g(0)=0 g'(0)=1) in 256-bit arithmetic. Forming Ai from f and g cancels
// ~e^{2 xi} of magnitude (xi = (2/3)|z|^{3/2}), about 16 decimal digits at
// the series radius; the working precision absorbs that with room to spare.
void airy_series(cplx zd, cplx& ai, cplx& aip, cplx& bi, cplx& bip) {
    static const mpf_class AI0(AI0_STR, MPF_PREC);
    static const mpf_class AIP0(AIP0_STR, MPF_PREC);
    static const mpf_class SQRT3(SQRT3_STR, MPF_PREC);

    CMpf z(zd.real(), zd.imag());
    CMpf z3 = z;
    cmpf_mul(z3, z);
    cmpf_mul(z3, z);

    CMpf f(1.0, 0.0), tf(1.0, 0.0);
    CMpf tfp = z;
    cmpf_mul(tfp, z);
    cmpf_div_ui(tfp, 2);
    CMpf fp = tfp;
    CMpf g = z, tg = z;
    CMpf gp(1.0, 0.0), tgp(1.0, 0.0);
    for (unsigned long k = 1; k < 600; ++k) {
        cmpf_mul(tf, z3);
        cmpf_div_ui(tf, (3 * k - 1) * (3 * k));
        cmpf_add(f, tf);
        cmpf_mul(tg, z3);
        cmpf_div_ui(tg, (3 * k) * (3 * k + 1));
        cmpf_add(g, tg);
        cmpf_mul(tgp, z3);
        cmpf_div_ui(tgp, (3 * k - 2) * (3 * k));
        cmpf_add(gp, tgp);
        cmpf_mul(tfp, z3);
        cmpf_div_ui(tfp, (3 * k) * (3 * k + 2));
        cmpf_add(fp, tfp);
        if (cmpf_mag(tf) + cmpf_mag(tg) <
            1e-45 * (cmpf_mag(f) + cmpf_mag(g) + 1.0))
            break;
    }
    auto combine = [&](const CMpf& a, const CMpf& b, const mpf_class& ca,
                       const mpf_class& cb) {
        return cplx(mpf_class(ca * a.re + cb * b.re).get_d(),
                    mpf_class(ca * a.im + cb * b.im).get_d());
    };
    mpf_class mAIP0(-AIP0, MPF_PREC);
    ai = combine(f, g, AI0, AIP0);
    aip = combine(fp, gp, AI0, AIP0);
    bi = combine(f, g, mpf_class(SQRT3 * AI0, MPF_PREC),
                 mpf_class(SQRT3 * mAIP0, MPF_PREC));
    bip = combine(fp, gp, mpf_class(SQRT3 * AI0, MPF_PREC),
                  mpf_class(SQRT3 * mAIP0, MPF_PREC));
}

// Poincare expansion of Ai, Ai' for large |z|, |arg z| bounded away from pi.
void ai_asym(cplx z, cplx& ai, cplx& aip) {
    cplx sz = std::sqrt(z);
    cplx xi = (2.0 / 3.0) * z * sz;
    cplx su(1.0), sv(1.0), t(1.0);
    double prev = 1e300;
    for (int k = 1; k < 26; ++k) {
        t /= -xi;
        double mag = std::abs(t) * uv.u[k];
        if (mag > prev) break;  // expansion is asymptotic: stop at min term
        su += uv.u[k] * t;
        sv += uv.v[k] * t;
        prev = mag;
        if (mag < 1e-18 * std::abs(su)) break;
    }
    cplx q = std::exp(-xi) / (2.0 * SQRT_PI);
    ai = q * su / std::sqrt(sz);
    aip = -q * sv * std::sqrt(sz);
}

// Ai, Ai' anywhere outside the series disk. Near the negative axis the
// expansion above is rotated through Ai(z) = -w Ai(wz) - w^2 Ai(w^2 z),
// w = e^{2 pi i/3}; the rotated arguments land well inside the good sector.
void ai_pair(cplx z, cplx& ai, cplx& aip) {
    if (std::abs(std::arg(z)) <= 2.1) {  // just above 2 pi/3
        ai_asym(z, ai, aip);
        return;
    }
    const cplx w(-0.5, 0.86602540378443864676);
    cplx a1, a1p, a2, a2p;
    ai_asym(w * z, a1, a1p);
    ai_asym(std::conj(w) * z, a2, a2p);
    ai = -w * a1 - std::conj(w) * a2;
    aip = -std::conj(w) * a1p - w * a2p;
}

}  // namespace

AiryQuadC airy_c(cplx z) {
    AiryQuadC r;
    if (std::abs(z) <= SERIES_RADIUS) {
        airy_series(z, r.ai, r.ai_prime, r.bi, r.bi_prime);
        return r;
    }
    cplx ai, aip;
    ai_pair(z, ai, aip);
    r.ai = ai;
    r.ai_prime = aip;
    // Bi(z) = e^{i pi/6} Ai(z e^{2 pi i/3}) + e^{-i pi/6} Ai(z e^{-2 pi i/3})
    const cplx w(-0.5, 0.86602540378443864676);
    const cplx e16(0.86602540378443864676, 0.5);    // e^{i pi/6}
    const cplx e56(-0.86602540378443864676, 0.5);   // e^{5 i pi/6}
    cplx b1, b1p, b2, b2p;
    ai_pair(w * z, b1, b1p);
    ai_pair(std::conj(w) * z, b2, b2p);
    r.bi = e16 * b1 + std::conj(e16) * b2;
    r.bi_prime = e56 * b1p + std::conj(e56) * b2p;
    return r;
}

AiryQuad airy(double x) {
    AiryQuadC c = airy_c(cplx(x, 0.0));
    return AiryQuad{c.ai.real(), c.ai_prime.real(), c.bi.real(),
                    c.bi_prime.real()};
}

double connection_check(cplx z) {
    const cplx w(-0.5, 0.86602540378443864676);
    AiryQuadC at_z = airy_c(z);
    AiryQuadC at_wz = airy_c(w * z);
    cplx resid = 2.0 * w * at_wz.ai + at_z.ai - cplx(0.0, 1.0) * at_z.bi;
    double scale = std::abs(at_z.ai) + std::abs(at_z.bi);
    return std::abs(resid) / (scale > 0.0 ? scale : 1.0);
}

void airy_scaled(double x, double* log_ai, double* log_ai_prime, double* log_bi,
                 double* log_bi_prime) {
    double xi = (2.0 / 3.0) * x * std::sqrt(x);
    double su_m = 1.0, sv_m = 1.0;  // alternating sums, for Ai
    double su_p = 1.0, sv_p = 1.0;  // straight sums, for Bi
    double t = 1.0, prev = 1e300;
    for (int k = 1; k < 26; ++k) {
        t /= xi;
        double mag = t * uv.u[k];
        if (mag > prev) break;
        double s = (k % 2) ? -1.0 : 1.0;
        su_m += s * uv.u[k] * t;
        sv_m += s * uv.v[k] * t;
        su_p += uv.u[k] * t;
        sv_p += uv.v[k] * t;
        prev = mag;
        if (mag < 1e-18) break;
    }
    double lq = std::log(2.0 * SQRT_PI);
    double lx4 = 0.25 * std::log(x);
    if (log_ai) *log_ai = -xi + std::log(su_m) - lq - lx4;
    if (log_ai_prime) *log_ai_prime = -xi + std::log(sv_m) - lq + lx4;
    if (log_bi) *log_bi = xi + std::log(su_p) - std::log(SQRT_PI) - lx4;
    if (log_bi_prime) *log_bi_prime = xi + std::log(sv_p) - std::log(SQRT_PI) + lx4;
}

}  // namespace mx
