#ifndef MX_RATIONAL_HPP
#define MX_RATIONAL_HPP

// Exact rational and Gaussian-rational arithmetic on top of GMP.
// mpq_class keeps results canonical (positive denominator, reduced fraction)
// when the operands already are, but its two-argument constructor does not
// reduce. The evaluation entry points canonicalize their inputs, so callers
// may build values like Rat(2, 4) freely.

#include <gmpxx.h>

#include <string>

#include "core/scaled.hpp"

namespace mx {

using Rat = mpq_class;

struct GRat {
    Rat re, im;

    GRat() : re(0), im(0) {}
    GRat(const Rat& r) : re(r), im(0) {}
    GRat(const Rat& r, const Rat& i) : re(r), im(i) {}

    bool is_real() const { return im == 0; }
    bool is_zero() const { return re == 0 && im == 0; }
    GRat conj() const { return GRat(re, Rat(-im)); }
};

GRat operator+(const GRat& x, const GRat& y);
GRat operator-(const GRat& x, const GRat& y);
GRat operator*(const GRat& x, const GRat& y);
GRat operator/(const GRat& x, const GRat& y);
bool operator==(const GRat& x, const GRat& y);

// Parse a plain decimal string ("0.171", "-1", "5.829", "1e-3") exactly.
// Throws std::invalid_argument on malformed input.
Rat rat_from_decimal(const std::string& s);

// Exact-digit conversions (the mantissa comes from the big-integer decimal
// expansion, not from a double round trip).
ScaledReal scaled_from_rat(const Rat& x);
LogComplex lc_from_grat(const GRat& x);

double rat_to_double(const Rat& x);
cplx grat_to_cplx(const GRat& x);

}  // namespace mx

#endif
