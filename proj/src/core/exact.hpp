#ifndef MX_EXACT_HPP
#define MX_EXACT_HPP

// Ground-truth evaluation of the Meixner polynomials M_n(z; beta, c) and of
// their monic form pi_n, in exact (Gaussian-)rational arithmetic. These values
// are the oracle every asymptotic formula is tested against.

#include "core/rational.hpp"

namespace mx {

struct MeixnerParams {
    Rat c;     // 0 < c < 1
    Rat beta;  // 1 <= beta < 2
    long n = 0;

    void validate() const;  // throws std::domain_error
};

// Terminating 2F1 sum: sum_{k=0}^n (-n)_k (-x)_k / ((beta)_k k!) (1-1/c)^k
GRat meixner_hyp(const MeixnerParams& p, const GRat& x);

// pi_n(x) = (beta)_n (1 - 1/c)^{-n} M_n(x)
GRat monic_from_meixner(const MeixnerParams& p, const GRat& x);

// Forward three-term recurrence from pi_0 = 1, pi_{-1} = 0:
// z pi_n = pi_{n+1} + (n + (n+beta)c)/(1-c) pi_n + n(n+beta-1)c/(1-c)^2 pi_{n-1}
GRat monic_recurrence(const MeixnerParams& p, const GRat& x);

// pi_n(n*z_outer - beta/2), converted to scaled form. The oracle entry point.
LogComplex eval_scaled_exact(const MeixnerParams& p, const GRat& z_outer);
ScaledReal eval_scaled_exact_real(const MeixnerParams& p, const Rat& z_outer);

// Normalized discrete weight (beta)_k c^k / k!
Rat weight_ratio(const MeixnerParams& p, unsigned long k);

// (n z - beta/2) mod 2 reduced exactly in rational arithmetic, result in
// [-1, 1). The trig factors sin/cos(pi (nz - beta/2)) have period 2 in this
// argument, and for large n z the reduction must happen before any rounding.
double phase_mod2(const MeixnerParams& p, const Rat& z_re);

}  // namespace mx

#endif
