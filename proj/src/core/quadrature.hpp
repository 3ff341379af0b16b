#ifndef MX_QUADRATURE_HPP
#define MX_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <stdexcept>

namespace mx {

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive Gauss-Kronrod (G7,K15) on [t0,t1] to an absolute tolerance.
// Bisects the worst interval first; throws QuadratureError if the interval
// budget is exhausted before the tolerance is met.
std::complex<double> integrate(const std::function<std::complex<double>(double)>& f,
                               double t0, double t1, double abs_tol,
                               double* err_out = nullptr);

double integrate_real(const std::function<double(double)>& f, double t0, double t1,
                      double abs_tol, double* err_out = nullptr);

}  // namespace mx

#endif
