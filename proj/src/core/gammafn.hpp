#ifndef MX_GAMMAFN_HPP
#define MX_GAMMAFN_HPP

#include <complex>

namespace mx {

// Principal-branch log-gamma for complex argument. Strategy: shift with
// log Gamma(z) = log Gamma(z+m) - sum log(z+k) until Re >= 20, then the
// Stirling series with 15 Bernoulli terms; reflection for Re z < 0.5.
// Relative error of exp(result) <= 1e-12 for |z| >= 1 away from the poles.
std::complex<double> log_gamma(std::complex<double> z);

// Digamma (psi) with the same shift strategy.
std::complex<double> digamma(std::complex<double> z);

}  // namespace mx

#endif
