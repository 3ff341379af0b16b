#ifndef MX_AIRY_HPP
#define MX_AIRY_HPP

#include <complex>

namespace mx {

struct AiryQuad {
    double ai = 0, ai_prime = 0, bi = 0, bi_prime = 0;
};

struct AiryQuadC {
    std::complex<double> ai, ai_prime, bi, bi_prime;
};

// Ai, Bi and derivatives. Maclaurin series summed in 256-bit floats for
// |x| <= 9 (the series loses ~e^{2|x|^{3/2}} digits to cancellation, far more
// than a double holds), asymptotic expansions beyond; relative accuracy
// ~1e-12 away from zeros, valid up to |x| = 100 (Bi(100) fits in a double).
AiryQuad airy(double x);

// Complex-argument variant. Series for |z| <= 9; for larger |z| Ai comes from
// the asymptotic expansion (rotated into |arg z| <= 2 pi/3) and Bi from
// Bi(z) = e^{i pi/6} Ai(z e^{2 pi i/3}) + e^{-i pi/6} Ai(z e^{-2 pi i/3}).
AiryQuadC airy_c(std::complex<double> z);

// Residual of 2 omega Ai(omega z) + Ai(z) - i Bi(z), omega = e^{2 pi i/3}.
double connection_check(std::complex<double> z);

// log Ai, log(-Ai'), log Bi, log Bi' for large positive x (overflow guard).
void airy_scaled(double x, double* log_ai, double* log_ai_prime, double* log_bi,
                 double* log_bi_prime);

}  // namespace mx

#endif
