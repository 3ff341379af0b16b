#include "core/gammafn.hpp"

#include <cmath>

namespace mx {

using cplx = std::complex<double>;

// B_{2k} / (2k (2k-1)) for k = 1..15
static const double STIRLING_COEF[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
    854513.0 / 63756.0,
    -236364091.0 / 1506960.0,
    8553103.0 / 4572.0,
    -23749461029.0 / 1051512.0,
    8615841276005.0 / 25139040.0,
};

// B_{2k} / (2k) for k = 1..12 (digamma tail)
static const double DIGAMMA_COEF[] = {
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
    43867.0 / 14364.0,
    -174611.0 / 6600.0,
    77683.0 / 276.0,
    -236364091.0 / 65520.0,
};

static cplx stirling_log_gamma(cplx z) {
    // requires Re z >= 20
    cplx lz = std::log(z);
    cplx s = (z - 0.5) * lz - z + 0.5 * std::log(2.0 * M_PI);
    cplx iz2 = 1.0 / (z * z);
    cplx term = 1.0 / z;
    for (double coef : STIRLING_COEF) {
        s += coef * term;
        term *= iz2;
    }
    return s;
}

// log(sin(pi z)) for Im z >= 0, branch consistent with the principal
// log-gamma reflection formula.
static cplx log_sin_pi_upper(cplx z) {
    double xr = std::fmod(z.real(), 2.0);
    cplx e = std::exp(cplx(0.0, 2.0 * M_PI) * cplx(xr, z.imag()));
    // sin(pi z) = e^{-i pi z} (1 - e^{2 i pi z}) * (i/2)
    return -cplx(0.0, M_PI) * z + std::log(cplx(0.0, 0.5)) + std::log(1.0 - e);
}

cplx log_gamma(cplx z) {
    if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));
    if (z.real() < 0.5) {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return std::log(M_PI) - log_sin_pi_upper(z) - log_gamma(1.0 - z);
    }
    cplx shift(0.0, 0.0);
    while (z.real() < 20.0) {
        shift += std::log(z);
        z += 1.0;
    }
    return stirling_log_gamma(z) - shift;
}

cplx digamma(cplx z) {
    if (z.imag() < 0.0) return std::conj(digamma(std::conj(z)));
    cplx shift(0.0, 0.0);
    while (z.real() < 20.0) {
        shift += 1.0 / z;
        z += 1.0;
    }
    cplx s = std::log(z) - 0.5 / z;
    cplx iz2 = 1.0 / (z * z);
    cplx term = iz2;
    for (double coef : DIGAMMA_COEF) {
        s -= coef * term;
        term *= iz2;
    }
    return s - shift;
}

}  // namespace mx
