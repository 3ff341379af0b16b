#ifndef MEIXNER_CAPI_H
#define MEIXNER_CAPI_H

/* C surface of the Meixner asymptotics library.
 *
 * All entry points return an mx_status; MX_OK is zero. A context carries the
 * parameters (c, beta, n) plus region/quadrature settings and the last error
 * message. Values up to 10^400 are exchanged in sign + log10-magnitude form
 * (with a decimal mantissa string for real values), never as raw doubles.
 *
 * z coordinates are passed as decimal strings and parsed into exact
 * rationals, so the arbitrary-precision reference path stays exact.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mx_ctx mx_ctx;

typedef enum {
    MX_OK = 0,
    MX_ERR_PARSE = 2,  /* malformed numbers / invalid parameters */
    MX_ERR_DOMAIN = 3, /* region, branch or quadrature failures */
    MX_ERR_IO = 4,     /* reserved for callers doing file output */
    MX_ERR_VERIFY = 5  /* one or more identity checks failed */
} mx_status;

/* c and beta as decimal strings (exact); returns NULL only on allocation
 * failure. Invalid parameter values are reported by the first call that uses
 * them. */
mx_ctx* mx_ctx_new(const char* c, const char* beta, long n);
void mx_ctx_free(mx_ctx* ctx);

/* Message for the most recent failing call on this context. */
const char* mx_last_error(const mx_ctx* ctx);

/* Region geometry (epsilon = disk radius, delta = strip half-height) and
 * quadrature tolerance. Pass 0 to keep the built-in defaults. */
mx_status mx_set_geometry(mx_ctx* ctx, double epsilon, double delta);
mx_status mx_set_quad_tol(mx_ctx* ctx, double tol);

typedef struct {
    int sign;          /* -1, 0, +1; meaningful when is_complex == 0 */
    double log10_mag;  /* log10 |value|; -HUGE_VAL when value == 0 */
    double phase;      /* radians in (-pi, pi]; 0 or pi for real values */
    char mantissa[24]; /* decimal mantissa in [1,10), real values only */
    int is_complex;
} mx_value;

typedef struct {
    mx_value exact;      /* reference value, when requested */
    mx_value asym;       /* asymptotic value, when requested */
    int has_exact;
    int has_asym;
    double rel_err;      /* |asym/exact - 1|; -1 when either is missing */
    double err_estimate; /* formula's own error estimate; -1 when no asym */
    int cancellation;    /* 1 when the trig factor is near a polynomial zero */
    char region[16];
    char formula[8];
} mx_result;

#define MX_WANT_EXACT 1
#define MX_WANT_ASYM 2

/* Evaluate pi_n(n z - beta/2). z = z_re + i z_im, both decimal strings;
 * z_im may be NULL for real z. what is a bitmask of MX_WANT_*. */
mx_status mx_eval(mx_ctx* ctx, const char* z_re, const char* z_im, int what,
                  mx_result* out);

/* Region name for a point, written into buf (truncated if needed). */
mx_status mx_classify(mx_ctx* ctx, double z_re, double z_im, char* buf,
                      int buf_len);

/* One line per identity check. */
typedef void (*mx_verify_cb)(const char* name, double residual, double tol,
                             int pass, const char* detail, void* user);

/* Runs the identity suites; cb may be NULL. inject_fault flips an internal
 * phase sign so the scalar-identity suite must fail (harness self-test).
 * Returns MX_OK when everything passes, MX_ERR_VERIFY otherwise. */
mx_status mx_verify(mx_ctx* ctx, int inject_fault, mx_verify_cb cb, void* user);

#ifdef __cplusplus
}
#endif

#endif
