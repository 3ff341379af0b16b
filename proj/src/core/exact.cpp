#include "core/exact.hpp"

#include <stdexcept>

namespace mx {

void MeixnerParams::validate() const {
    if (!(c > 0 && c < 1)) throw std::domain_error("c must be in (0,1)");
    if (!(beta >= 1 && beta < 2)) throw std::domain_error("beta must be in [1,2)");
    if (n < 0) throw std::domain_error("n must be >= 0");
}

// mpq_class keeps results reduced only when the operands already are, and the
// two-argument constructor stores num/den verbatim. Repair the invariant on
// everything that crosses into this layer so callers may pass e.g. Rat(2, 4).
static GRat canonical(const GRat& x) {
    GRat r = x;
    r.re.canonicalize();
    r.im.canonicalize();
    return r;
}

static MeixnerParams canonical(const MeixnerParams& p) {
    MeixnerParams q = p;
    q.c.canonicalize();
    q.beta.canonicalize();
    return q;
}

GRat meixner_hyp(const MeixnerParams& p_in, const GRat& x_in) {
    MeixnerParams p = canonical(p_in);
    GRat x = canonical(x_in);
    p.validate();
    Rat w = 1 - Rat(1) / p.c;  // 1 - 1/c, negative
    GRat sum(Rat(1));
    GRat term(Rat(1));
    for (long k = 0; k < p.n; ++k) {
        // multiply in the k -> k+1 ratio:
        // (-n+k)(-x+k) / ((beta+k)(k+1)) * w
        Rat num_n = Rat(-p.n + k);
        GRat num_x = GRat(Rat(k)) - x;
        Rat den = (p.beta + k) * Rat(k + 1);
        term = term * GRat(Rat(num_n * w / den)) * num_x;
        sum = sum + term;
    }
    return sum;
}

static Rat pochhammer(const Rat& a, long n) {
    Rat r(1);
    for (long k = 0; k < n; ++k) r *= a + k;
    return r;
}

GRat monic_from_meixner(const MeixnerParams& p_in, const GRat& x) {
    MeixnerParams p = canonical(p_in);
    Rat w = 1 - Rat(1) / p.c;
    Rat scale = pochhammer(p.beta, p.n);
    Rat wn(1);
    for (long k = 0; k < p.n; ++k) wn *= w;
    scale /= wn;
    GRat m = meixner_hyp(p, x);
    return GRat(Rat(m.re * scale), Rat(m.im * scale));
}

GRat monic_recurrence(const MeixnerParams& p_in, const GRat& x_in) {
    MeixnerParams p = canonical(p_in);
    GRat x = canonical(x_in);
    p.validate();
    Rat omc = 1 - p.c;
    GRat prev(Rat(0));  // pi_{-1}
    GRat cur(Rat(1));   // pi_0
    for (long k = 0; k < p.n; ++k) {
        Rat A = (Rat(k) + (k + p.beta) * p.c) / omc;
        Rat B = Rat(k) * (k + p.beta - 1) * p.c / (omc * omc);
        GRat next = (x - GRat(A)) * cur - GRat(B) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

LogComplex eval_scaled_exact(const MeixnerParams& p_in, const GRat& z_in) {
    MeixnerParams p = canonical(p_in);
    GRat z_outer = canonical(z_in);
    GRat arg = GRat(Rat(p.n)) * z_outer - GRat(Rat(p.beta / 2));
    return lc_from_grat(monic_recurrence(p, arg));
}

ScaledReal eval_scaled_exact_real(const MeixnerParams& p_in, const Rat& z_in) {
    MeixnerParams p = canonical(p_in);
    Rat z_outer = z_in;
    z_outer.canonicalize();
    Rat arg = Rat(p.n) * z_outer - p.beta / 2;
    GRat v = monic_recurrence(p, GRat(arg));
    return scaled_from_rat(v.re);
}

Rat weight_ratio(const MeixnerParams& p, unsigned long k) {
    Rat r(1);
    Rat ck(1);
    for (unsigned long j = 0; j < k; ++j) {
        r = r * (p.beta + (long)j) / Rat((long)j + 1);
        ck *= p.c;
    }
    return r * ck;
}

double phase_mod2(const MeixnerParams& p_in, const Rat& z_re_in) {
    MeixnerParams p = canonical(p_in);
    Rat z_re = z_re_in;
    z_re.canonicalize();
    Rat t = Rat(p.n) * z_re - p.beta / 2;
    // floor division of t/2, then t - 2*floor(t/2) shifted into [-1, 1)
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), t.get_num().get_mpz_t(),
               mpz_class(2 * t.get_den()).get_mpz_t());
    Rat r = t - 2 * Rat(q);
    if (r >= 1) r -= 2;
    return r.get_d();
}

}  // namespace mx
