#include "core/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace mx {

namespace {

// QUADPACK dqk15 abscissae/weights
const double XGK[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
const double WGK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
const double WG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Interval {
    double lo, hi, err;
    std::complex<double> val;
    bool operator<(const Interval& o) const { return err < o.err; }
};

Interval gk15(const std::function<std::complex<double>(double)>& f, double lo, double hi) {
    double hc = 0.5 * (hi - lo), ct = 0.5 * (hi + lo);
    std::complex<double> resk(0.0, 0.0), resg(0.0, 0.0);
    std::complex<double> fv[15];
    for (int j = 0; j < 7; ++j) {
        double x = hc * XGK[j];
        fv[j] = f(ct - x);
        fv[14 - j] = f(ct + x);
    }
    fv[7] = f(ct);
    for (int j = 0; j < 7; ++j) resk += WGK[j] * (fv[j] + fv[14 - j]);
    resk += WGK[7] * fv[7];
    // Gauss points are the odd-index Kronrod points
    for (int j = 0; j < 3; ++j) resg += WG[j] * (fv[2 * j + 1] + fv[13 - 2 * j]);
    resg += WG[3] * fv[7];
    Interval r;
    r.lo = lo;
    r.hi = hi;
    r.val = resk * hc;
    r.err = std::abs((resk - resg) * hc);
    // sharpen the error estimate the way QUADPACK does
    if (r.err > 0.0) r.err = std::min(r.err, 200.0 * r.err * std::sqrt(r.err));
    return r;
}

}  // namespace

std::complex<double> integrate(const std::function<std::complex<double>(double)>& f,
                               double t0, double t1, double abs_tol, double* err_out) {
    if (t0 == t1) {
        if (err_out) *err_out = 0.0;
        return {0.0, 0.0};
    }
    std::priority_queue<Interval> q;
    q.push(gk15(f, t0, t1));
    double total_err = q.top().err;
    std::complex<double> total = q.top().val;
    const int max_intervals = 200000;
    int n = 1;
    while (total_err > abs_tol && n < max_intervals) {
        Interval worst = q.top();
        q.pop();
        double mid = 0.5 * (worst.lo + worst.hi);
        if (mid == worst.lo || mid == worst.hi) {
            // interval at machine resolution; accept its estimate
            total_err -= worst.err;
            worst.err = 0.0;
            q.push(worst);
            continue;
        }
        Interval left = gk15(f, worst.lo, mid);
        Interval right = gk15(f, mid, worst.hi);
        total += left.val + right.val - worst.val;
        total_err += left.err + right.err - worst.err;
        q.push(left);
        q.push(right);
        ++n;
        if (total_err < 0.0) total_err = 0.0;
    }
    if (total_err > abs_tol * 16.0)
        throw QuadratureError("quadrature tolerance not met");
    if (err_out) *err_out = total_err;
    return total;
}

double integrate_real(const std::function<double(double)>& f, double t0, double t1,
                      double abs_tol, double* err_out) {
    auto g = [&f](double t) { return std::complex<double>(f(t), 0.0); };
    return integrate(g, t0, t1, abs_tol, err_out).real();
}

}  // namespace mx
