#include "meixner/capi.h"

#include <cmath>
#include <cstring>
#include <new>
#include <string>

#include "core/exact.hpp"
#include "core/formulas.hpp"
#include "core/verify.hpp"

using namespace mx;

struct mx_ctx {
    std::string c_str = "0.5";
    std::string beta_str = "1.5";
    long n = 100;
    double epsilon = 0.0;  // 0 -> defaults
    double delta = 0.0;
    double quad_tol = 1e-12;
    std::string last_error;
};

namespace {

const double LN10 = 2.302585092994045684;

mx_status fail(mx_ctx* ctx, mx_status st, const std::string& msg) {
    ctx->last_error = msg;
    return st;
}

void fill_real(mx_value& v, const ScaledReal& s) {
    v.sign = s.sign;
    v.is_complex = 0;
    v.phase = s.sign < 0 ? M_PI : 0.0;
    if (s.sign == 0) {
        v.log10_mag = -HUGE_VAL;
        std::strcpy(v.mantissa, "0");
        return;
    }
    v.log10_mag = s.log10_mag;
    std::snprintf(v.mantissa, sizeof v.mantissa, "%s", s.mantissa.c_str());
}

void fill_complex(mx_value& v, const LogComplex& lc) {
    v.sign = 0;
    v.is_complex = 1;
    v.mantissa[0] = '\0';
    if (lc.is_zero()) {
        v.log10_mag = -HUGE_VAL;
        v.phase = 0.0;
        return;
    }
    v.log10_mag = lc.log_mag / LN10;
    v.phase = lc.phase;
}

// Exact parameter parse + validation; throws std::invalid_argument or
// std::domain_error, both of which the callers map to MX_ERR_PARSE.
MeixnerParams exact_params(const mx_ctx* ctx) {
    MeixnerParams p;
    p.c = rat_from_decimal(ctx->c_str);
    p.beta = rat_from_decimal(ctx->beta_str);
    p.n = ctx->n;
    p.validate();
    return p;
}

AuxParams aux_params(const MeixnerParams& p) {
    AuxParams a;
    a.c = rat_to_double(p.c);
    a.beta = rat_to_double(p.beta);
    a.n = (int)p.n;
    return a;
}

}  // namespace

extern "C" {

mx_ctx* mx_ctx_new(const char* c, const char* beta, long n) {
    mx_ctx* ctx = new (std::nothrow) mx_ctx;
    if (!ctx) return nullptr;
    if (c) ctx->c_str = c;
    if (beta) ctx->beta_str = beta;
    ctx->n = n;
    return ctx;
}

void mx_ctx_free(mx_ctx* ctx) { delete ctx; }

const char* mx_last_error(const mx_ctx* ctx) {
    return ctx ? ctx->last_error.c_str() : "null context";
}

mx_status mx_set_geometry(mx_ctx* ctx, double epsilon, double delta) {
    if (!ctx) return MX_ERR_PARSE;
    if (epsilon < 0.0 || delta < 0.0)
        return fail(ctx, MX_ERR_PARSE, "epsilon and delta must be >= 0");
    if (epsilon > 0.0 && delta > 0.0 && !(epsilon < delta))
        return fail(ctx, MX_ERR_PARSE, "epsilon must be < delta");
    ctx->epsilon = epsilon;
    ctx->delta = delta;
    return MX_OK;
}

mx_status mx_set_quad_tol(mx_ctx* ctx, double tol) {
    if (!ctx) return MX_ERR_PARSE;
    if (!(tol > 0.0 && tol <= 1e-3))
        return fail(ctx, MX_ERR_PARSE, "quad tolerance must be in (0, 1e-3]");
    ctx->quad_tol = tol;
    return MX_OK;
}

mx_status mx_eval(mx_ctx* ctx, const char* z_re, const char* z_im, int what,
                  mx_result* out) {
    if (!ctx) return MX_ERR_PARSE;
    if (!z_re || !out || !(what & (MX_WANT_EXACT | MX_WANT_ASYM)))
        return fail(ctx, MX_ERR_PARSE, "missing argument");
    std::memset(out, 0, sizeof *out);
    out->rel_err = -1.0;
    out->err_estimate = -1.0;

    MeixnerParams p;
    Rat zr, zi;
    bool real_z;
    try {
        p = exact_params(ctx);
        zr = rat_from_decimal(z_re);
        zi = (z_im && *z_im) ? rat_from_decimal(z_im) : Rat(0);
        real_z = zi == 0;
    } catch (const std::exception& e) {
        return fail(ctx, MX_ERR_PARSE, e.what());
    }

    LogComplex exact_lc;
    try {
        if (what & MX_WANT_EXACT) {
            if (real_z) {
                ScaledReal sr = eval_scaled_exact_real(p, zr);
                fill_real(out->exact, sr);
                exact_lc = lc_from_scaled(sr);
            } else {
                exact_lc = eval_scaled_exact(p, GRat(zr, zi));
                fill_complex(out->exact, exact_lc);
            }
            out->has_exact = 1;
        }
        if (what & MX_WANT_ASYM) {
            if (p.n < 1)
                return fail(ctx, MX_ERR_DOMAIN,
                            "asymptotic evaluation needs n >= 1");
            AuxParams ap = aux_params(p);
            EvalOptions opt;
            opt.eps = ctx->epsilon;
            opt.delta = ctx->delta;
            opt.quad_tol = ctx->quad_tol;
            opt.have_phase = true;
            opt.phase_red = phase_mod2(p, zr);
            cplx z(rat_to_double(zr), rat_to_double(zi));
            AsymptoticResult r = evaluate(ap, z, opt);
            if (r.is_real) fill_real(out->asym, r.real_value);
            else fill_complex(out->asym, r.value);
            out->has_asym = 1;
            out->err_estimate = r.err_estimate;
            out->cancellation = r.cancellation_warning ? 1 : 0;
            std::snprintf(out->region, sizeof out->region, "%s",
                          region_name(r.region.tag));
            std::snprintf(out->formula, sizeof out->formula, "%s",
                          formula_name(r.formula));
            if (out->has_exact) out->rel_err = rel_diff(exact_lc, r.value);
        }
    } catch (const std::exception& e) {
        return fail(ctx, MX_ERR_DOMAIN, e.what());
    }
    return MX_OK;
}

mx_status mx_classify(mx_ctx* ctx, double z_re, double z_im, char* buf,
                      int buf_len) {
    if (!ctx) return MX_ERR_PARSE;
    if (!buf || buf_len < 1) return fail(ctx, MX_ERR_PARSE, "missing buffer");
    try {
        MeixnerParams p = exact_params(ctx);
        TurningPoints tp = turning_points(rat_to_double(p.c));
        RegionConfig rc = RegionConfig::defaults(tp);
        double eps = ctx->epsilon > 0.0 ? ctx->epsilon : rc.eps;
        double delta = ctx->delta > 0.0 ? ctx->delta : rc.delta;
        Region r = classify_region(cplx(z_re, z_im), eps, delta, tp);
        std::snprintf(buf, (size_t)buf_len, "%s", region_name(r.tag));
    } catch (const std::exception& e) {
        return fail(ctx, MX_ERR_PARSE, e.what());
    }
    return MX_OK;
}

mx_status mx_verify(mx_ctx* ctx, int inject_fault, mx_verify_cb cb,
                    void* user) {
    if (!ctx) return MX_ERR_PARSE;
    try {
        MeixnerParams p = exact_params(ctx);
        VerifyOptions vo;
        vo.quad_tol = ctx->quad_tol;
        vo.inject_phase_sign_flip = inject_fault != 0;
        VerifyReport rep = run_verify(aux_params(p), vo);
        for (const CheckResult& c : rep.checks)
            if (cb)
                cb(c.name.c_str(), c.residual, c.tol, c.pass ? 1 : 0,
                   c.detail.c_str(), user);
        if (!rep.all_pass)
            return fail(ctx, MX_ERR_VERIFY, "identity checks failed");
    } catch (const std::exception& e) {
        return fail(ctx, MX_ERR_DOMAIN, e.what());
    }
    return MX_OK;
}

}  // extern "C"
