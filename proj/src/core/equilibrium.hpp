#ifndef MX_EQUILIBRIUM_HPP
#define MX_EQUILIBRIUM_HPP

// Equilibrium-measure layer: turning points a, b with ab = 1, density rho,
// the g / phi / phi-tilde functions and the Airy conformal maps F, F-tilde.
//
// Branch conventions: r(z) = sqrt(z-a)*sqrt(z-b) with principal square roots
// is analytic off [a,b], behaves like +z at infinity, and equals
// -sqrt((a-x)(b-x)) on (-infinity, a). Boundary values on the cuts are taken
// by explicit side selection (default: upper), never by epsilon offsets.

#include <complex>
#include <stdexcept>

namespace mx {

using cplx = std::complex<double>;

enum class Side { none, upper, lower };

struct TurningPoints {
    double a = 0.0, b = 0.0;
};

TurningPoints turning_points(double c);  // throws std::domain_error outside (0,1)

// Equilibrium density: 1 on (0,a), arccos profile on (a,b).
double rho(double x, const TurningPoints& tp);

// Closed form g'(z) = -log[(z(b+a)-2+2 r(z))/(z(b-a))] + (-log c)/2.
cplx g_prime(cplx z, double c, const TurningPoints& tp, Side side = Side::none);

struct EqCtx {
    double c = 0.5;
    TurningPoints tp;
    double quad_tol = 1e-12;
    double detour_im = 0.5;  // |Im| of the detour path for near-axis targets

    explicit EqCtx(double c_, double quad_tol_ = 1e-12);
    double lagrange_l() const;  // l = 2 log((b-a)/4) - 2
};

cplx v_linear(double c, cplx z);  // v(z) = -z log c

// phi(z) = int_b^z log[(s(b+a)-2+2 r(s))/(s(b-a))] ds, cut on (-infinity, b].
// Real z <= 0 is outside phi's natural domain here; use g_function instead.
cplx phi(const EqCtx& eq, cplx z, Side side = Side::none);

// phi_tilde = phi +- i pi (1-z) in the upper/lower half-plane; real analytic
// across (0,a).
cplx phi_tilde(const EqCtx& eq, cplx z, Side side = Side::none);

// g via the identity 2g + 2phi - v - l = 0 (primary path); for real z < 0 the
// direct integral with an exact +-i pi term is used.
cplx g_function(const EqCtx& eq, cplx z, Side side = Side::none);

// Independent direct quadrature of int_0^b log(z-x) rho(x) dx (test oracle).
cplx g_direct(const EqCtx& eq, cplx z, Side side = Side::none);

// Airy maps: F = ((3/2) n phi)^{2/3}, F_tilde = (-(3/2) n phi_tilde)^{2/3},
// computed through the analytic factorizations F = K(z)(z-b), so that both
// are real and increasing through zero on the real axis.
cplx F_map(const EqCtx& eq, cplx z, int n, Side side = Side::none);
cplx F_tilde_map(const EqCtx& eq, cplx z, int n, Side side = Side::none);
// The analytic ratios F/(z-b) and F_tilde/(a-z) (needed to cancel 0/0
// amplitude factors in the turning-point formulas).
cplx F_ratio(const EqCtx& eq, cplx z, int n, Side side = Side::none);
cplx F_tilde_ratio(const EqCtx& eq, cplx z, int n, Side side = Side::none);

// Side-consistent elementary branches: principal for off-axis z, explicit
// upper/lower limits for real z on the cut of log/sqrt/pow.
// For a reflected argument w = const - z, the upper side in z approaches the
// cut of w from below; flip the side flag when evaluating such factors.
Side flip_side(Side s);

cplx log_cut(cplx z, Side side);
cplx sqrt_cut(cplx z, Side side);
cplx pow_cut(cplx z, double p, Side side);

}  // namespace mx

#endif
