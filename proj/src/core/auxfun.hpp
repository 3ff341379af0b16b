#ifndef MX_AUXFUN_HPP
#define MX_AUXFUN_HPP

// Auxiliary scalar functions that accompany the asymptotic formulas: the
// gamma-ratio factors V and W, the derived factors H and H-tilde, the node
// product correction E and its band counterpart E-tilde, the origin
// Riemann-Hilbert factor D, and the residual phase G-tilde / L.

#include <complex>

#include "core/equilibrium.hpp"
#include "core/scaled.hpp"

namespace mx {

struct AuxParams {
    double c = 0.5;
    double beta = 1.5;
    int n = 100;
};

// Node grid X_k = (k + beta/2)/n; X_k is in (0,1) exactly for k < n when
// 1 <= beta < 2.
struct NodeGrid {
    int n = 0;
    double beta = 0.0;
    double node(int k) const { return (k + 0.5 * beta) / n; }
};

struct AuxValues {
    cplx V;               // V(z), log-scale by definition (it is a log)
    LogComplex W;         // W(z) = 2 i n pi c^{-beta/2} Gamma(nz+beta/2)/Gamma(nz-beta/2+1)
    LogComplex H;         // H(z) = (z-1)^{beta-1} e^{-V(z)}
    LogComplex H_tilde;   // H~(z) = (1-z)^{beta-1} e^{-V(z)}
    cplx E;               // node product correction, O(1) away from [0,1]
    cplx E_tilde;         // E~(z) = +-i E e^{-+i pi(nz-beta/2)} / (2 sin(n pi z - beta pi/2))
    cplx L;               // leading form of the L expansion
};

// All quantities assembled in log space through log_gamma; the node product
// in E comes from the gamma-ratio closed form
// prod_k (z - X_k) = Gamma(nz-beta/2+1) / (n^n Gamma(nz-beta/2-n+1)).
// side selects the boundary value on the cuts (E on [0,1], powers of z-1,
// 1-z, z on their half-lines).
AuxValues aux_values(const AuxParams& p, cplx z, Side side = Side::none);

// log E(z) alone (also used by the overlap identities).
cplx log_e_function(const AuxParams& p, cplx z, Side side = Side::none);

// Which side of the upward-oriented imaginary axis a boundary value of D is
// taken from: left is Re z < 0 (the + side), right is Re z > 0 (the - side).
enum class AxisLimit { none, left, right };

// D(z) = exp{(1/2 pi i) int_0^inf [log(1-e^{-2n pi s - i pi beta})/(s+iz)
//                                 - log(1-e^{-2n pi s + i pi beta})/(s-iz)] ds}
// Off-axis z needs no limit flag; on the axis (Re z == 0) the principal-value
// limit is taken on the requested side, and a missing flag is an error.
cplx d_function(const AuxParams& p, cplx z, AxisLimit lim = AxisLimit::none,
                double abs_tol = 1e-12);
cplx log_d_function(const AuxParams& p, cplx z, AxisLimit lim = AxisLimit::none,
                    double abs_tol = 1e-12);

// G~'(z) = int_a^b V'(s) sqrt((s-a)(b-s)) ds / (2 pi (s-z) sqrt((z-a)(z-b)))
// with V' expressed through digamma. Defined for z off [a,b].
cplx g_tilde_prime(const AuxParams& p, const EqCtx& eq, cplx z,
                   Side side = Side::none);

// Leading form beta log n + log(2 i pi c^{-beta/2}); error is O(1/n).
cplx L_estimate(const AuxParams& p);

}  // namespace mx

#endif
