#ifndef MX_SCALED_HPP
#define MX_SCALED_HPP

// Log-scale number representations. Values handled by this library reach
// 10^400 and beyond, so nothing is ever held as a plain double magnitude:
// ScaledReal keeps sign + log10 + a decimal mantissa string (human readable,
// matches how reference tables print values), LogComplex keeps natural-log
// modulus + phase (cheap to multiply).

#include <cmath>
#include <complex>
#include <string>

namespace mx {

using cplx = std::complex<double>;

struct ScaledReal {
    int sign = 0;                  // -1, 0, +1
    double log10_mag = -HUGE_VAL;  // log10 of |value|; -inf when sign==0
    std::string mantissa;          // >=15 significant digits, in [1,10)

    bool is_zero() const { return sign == 0; }
    // value ~= sign * mantissa * 10^floor(log10_mag)
    long long exponent() const { return (long long)std::floor(log10_mag); }
    double mantissa_value() const;
};

struct LogComplex {
    double log_mag = -HUGE_VAL;  // natural log of modulus
    double phase = 0.0;          // in (-pi, pi]

    bool is_zero() const { return log_mag == -HUGE_VAL; }
};

// --- construction ---
ScaledReal scaled_zero();
ScaledReal scaled_from_double(double x);
// sign/log10 pair, mantissa synthesized from the fractional part of log10
ScaledReal scaled_from_log10(int sign, double log10_mag);
// parse "1.99529e233" style literals (used for frozen reference constants)
ScaledReal scaled_parse(const std::string& s);

LogComplex lc_zero();
LogComplex lc_one();
LogComplex lc_from_cplx(cplx w);
LogComplex lc_exp(cplx w);           // exp of a complex exponent, w may be huge
LogComplex lc_from_scaled(const ScaledReal& x);

// --- arithmetic ---
double wrap_phase(double p);  // into (-pi, pi]
LogComplex lc_mul(const LogComplex& x, const LogComplex& y);
LogComplex lc_div(const LogComplex& x, const LogComplex& y);
LogComplex lc_mul_cplx(const LogComplex& x, cplx w);
LogComplex lc_pow(const LogComplex& x, double p);  // principal: p*(log_mag + i*phase)
LogComplex lc_add(const LogComplex& x, const LogComplex& y);
LogComplex lc_neg(const LogComplex& x);

ScaledReal scaled_mul(const ScaledReal& x, const ScaledReal& y);
ScaledReal scaled_add(const ScaledReal& x, const ScaledReal& y);
ScaledReal scaled_neg(const ScaledReal& x);

// |a/b - 1| without overflow; returns HUGE_VAL when magnitudes are wildly apart
double rel_diff(const ScaledReal& a, const ScaledReal& b);
double rel_diff(const LogComplex& a, const LogComplex& b);

// LogComplex -> ScaledReal for values that must be real. |sin(phase)| is the
// relative imaginary residue; fails (returns false) if it exceeds imag_tol.
bool lc_to_scaled_real(const LogComplex& v, ScaledReal& out, double imag_tol = 1e-8);

std::string scaled_to_string(const ScaledReal& x, int digits = 15);

}  // namespace mx

#endif
