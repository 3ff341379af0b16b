#include "core/scaled.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace mx {

static const double LN10 = 2.302585092994045684;

double ScaledReal::mantissa_value() const {
    if (sign == 0) return 0.0;
    return std::strtod(mantissa.c_str(), nullptr);
}

double wrap_phase(double p) {
    if (!std::isfinite(p)) return 0.0;
    p = std::fmod(p, 2.0 * M_PI);
    if (p > M_PI) p -= 2.0 * M_PI;
    if (p <= -M_PI) p += 2.0 * M_PI;
    return p;
}

static std::string mantissa_digits(double m) {
    // m in [1,10); print 16 significant digits
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15f", m);
    return std::string(buf);
}

ScaledReal scaled_zero() { return ScaledReal{}; }

ScaledReal scaled_from_log10(int sign, double log10_mag) {
    ScaledReal r;
    if (sign == 0 || log10_mag == -HUGE_VAL) return r;
    r.sign = sign > 0 ? 1 : -1;
    double e = std::floor(log10_mag);
    double m = std::pow(10.0, log10_mag - e);
    if (m >= 10.0) m = std::nextafter(10.0, 0.0);
    if (m < 1.0) m = 1.0;
    r.log10_mag = log10_mag;
    r.mantissa = mantissa_digits(m);
    return r;
}

ScaledReal scaled_from_double(double x) {
    if (x == 0.0) return scaled_zero();
    int s = x > 0 ? 1 : -1;
    double ax = std::fabs(x);
    double e = std::floor(std::log10(ax));
    double m = ax / std::pow(10.0, e);
    if (m >= 10.0) { m /= 10.0; e += 1.0; }
    if (m < 1.0) { m *= 10.0; e -= 1.0; }
    ScaledReal r;
    r.sign = s;
    r.log10_mag = e + std::log10(m);
    r.mantissa = mantissa_digits(m);
    return r;
}

ScaledReal scaled_parse(const std::string& s) {
    // accepts forms like "1.99529e233", "-2.51701e180", "0", "12.5"
    std::string t = s;
    size_t epos = t.find_first_of("eE");
    long long exp10 = 0;
    if (epos != std::string::npos) {
        exp10 = std::atoll(t.c_str() + epos + 1);
        t = t.substr(0, epos);
    }
    int sign = 1;
    size_t i = 0;
    if (i < t.size() && (t[i] == '+' || t[i] == '-')) {
        if (t[i] == '-') sign = -1;
        ++i;
    }
    std::string digits;
    long long point_shift = 0;
    bool seen_point = false;
    for (; i < t.size(); ++i) {
        if (t[i] == '.') {
            if (seen_point) throw std::invalid_argument("bad number: " + s);
            seen_point = true;
            continue;
        }
        if (t[i] < '0' || t[i] > '9') throw std::invalid_argument("bad number: " + s);
        digits.push_back(t[i]);
        if (seen_point) ++point_shift;
    }
    // strip leading zeros
    size_t lead = digits.find_first_not_of('0');
    if (lead == std::string::npos) return scaled_zero();
    long long int_digits = (long long)digits.size() - point_shift;
    digits = digits.substr(lead);
    long long e = exp10 + int_digits - (long long)lead - 1;
    ScaledReal r;
    r.sign = sign;
    std::string mant = digits.substr(0, 1) + "." + (digits.size() > 1 ? digits.substr(1) : "0");
    while (mant.size() < 17) mant.push_back('0');
    r.mantissa = mant;
    double mv = std::strtod(mant.c_str(), nullptr);
    r.log10_mag = (double)e + std::log10(mv);
    return r;
}

LogComplex lc_zero() { return LogComplex{}; }
LogComplex lc_one() { return LogComplex{0.0, 0.0}; }

LogComplex lc_from_cplx(cplx w) {
    if (w == cplx(0.0, 0.0)) return lc_zero();
    return LogComplex{std::log(std::abs(w)), std::arg(w)};
}

LogComplex lc_exp(cplx w) { return LogComplex{w.real(), wrap_phase(w.imag())}; }

LogComplex lc_from_scaled(const ScaledReal& x) {
    if (x.sign == 0) return lc_zero();
    return LogComplex{x.log10_mag * LN10, x.sign > 0 ? 0.0 : M_PI};
}

LogComplex lc_mul(const LogComplex& x, const LogComplex& y) {
    if (x.is_zero() || y.is_zero()) return lc_zero();
    return LogComplex{x.log_mag + y.log_mag, wrap_phase(x.phase + y.phase)};
}

LogComplex lc_div(const LogComplex& x, const LogComplex& y) {
    if (x.is_zero()) return lc_zero();
    if (y.is_zero()) throw std::domain_error("lc_div by zero");
    return LogComplex{x.log_mag - y.log_mag, wrap_phase(x.phase - y.phase)};
}

LogComplex lc_mul_cplx(const LogComplex& x, cplx w) { return lc_mul(x, lc_from_cplx(w)); }

LogComplex lc_pow(const LogComplex& x, double p) {
    if (x.is_zero()) return lc_zero();
    return LogComplex{p * x.log_mag, wrap_phase(p * x.phase)};
}

LogComplex lc_neg(const LogComplex& x) {
    if (x.is_zero()) return x;
    return LogComplex{x.log_mag, wrap_phase(x.phase + M_PI)};
}

LogComplex lc_add(const LogComplex& x, const LogComplex& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    const LogComplex& big = x.log_mag >= y.log_mag ? x : y;
    const LogComplex& sml = x.log_mag >= y.log_mag ? y : x;
    double d = sml.log_mag - big.log_mag;  // <= 0
    if (d < -745.0) return big;            // below exp underflow
    cplx s = cplx(1.0, 0.0) * std::polar(1.0, big.phase) +
             std::exp(d) * std::polar(1.0, sml.phase);
    if (s == cplx(0.0, 0.0)) return lc_zero();
    return LogComplex{big.log_mag + std::log(std::abs(s)), wrap_phase(std::arg(s))};
}

ScaledReal scaled_neg(const ScaledReal& x) {
    ScaledReal r = x;
    r.sign = -r.sign;
    return r;
}

ScaledReal scaled_mul(const ScaledReal& x, const ScaledReal& y) {
    if (x.sign == 0 || y.sign == 0) return scaled_zero();
    double m = x.mantissa_value() * y.mantissa_value();  // in [1,100)
    long long e = x.exponent() + y.exponent();
    if (m >= 10.0) { m /= 10.0; e += 1; }
    ScaledReal r;
    r.sign = x.sign * y.sign;
    r.log10_mag = (double)e + std::log10(m);
    r.mantissa = [&] {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.15f", m);
        return std::string(buf);
    }();
    return r;
}

ScaledReal scaled_add(const ScaledReal& x, const ScaledReal& y) {
    if (x.sign == 0) return y;
    if (y.sign == 0) return x;
    const ScaledReal& big = x.log10_mag >= y.log10_mag ? x : y;
    const ScaledReal& sml = x.log10_mag >= y.log10_mag ? y : x;
    long long eb = big.exponent(), es = sml.exponent();
    if (eb - es > 320) return big;
    double v = big.sign * big.mantissa_value() +
               sml.sign * sml.mantissa_value() * std::pow(10.0, (double)(es - eb));
    if (v == 0.0) return scaled_zero();
    ScaledReal r = scaled_from_double(v);
    r.log10_mag += (double)eb;
    return r;
}

double rel_diff(const ScaledReal& a, const ScaledReal& b) {
    if (a.sign == 0 && b.sign == 0) return 0.0;
    if (a.sign == 0 || b.sign == 0) return HUGE_VAL;
    double dl = a.log10_mag - b.log10_mag;
    if (std::fabs(dl) > 15.0) return HUGE_VAL;
    double r = (double)(a.sign * b.sign) * std::pow(10.0, dl);
    return std::fabs(r - 1.0);
}

double rel_diff(const LogComplex& a, const LogComplex& b) {
    if (a.is_zero() && b.is_zero()) return 0.0;
    if (a.is_zero() || b.is_zero()) return HUGE_VAL;
    double dl = a.log_mag - b.log_mag;
    if (std::fabs(dl) > 35.0) return HUGE_VAL;
    cplx r = std::exp(dl) * std::polar(1.0, wrap_phase(a.phase - b.phase));
    return std::abs(r - cplx(1.0, 0.0));
}

bool lc_to_scaled_real(const LogComplex& v, ScaledReal& out, double imag_tol) {
    if (v.is_zero()) { out = scaled_zero(); return true; }
    double s = std::sin(v.phase);
    if (std::fabs(s) > imag_tol) return false;
    int sign = std::cos(v.phase) >= 0.0 ? 1 : -1;
    out = scaled_from_log10(sign, v.log_mag / LN10);
    return true;
}

std::string scaled_to_string(const ScaledReal& x, int digits) {
    if (x.sign == 0) return "0";
    std::string d;
    for (char ch : x.mantissa)
        if (ch >= '0' && ch <= '9') d.push_back(ch);
    while ((long long)d.size() < digits + 1) d.push_back('0');
    long long exp = x.exponent();
    // round to the requested number of significant digits, with carry
    bool carry = d[digits] >= '5';
    d = d.substr(0, digits);
    for (int i = digits - 1; carry && i >= 0; --i) {
        if (d[i] == '9') {
            d[i] = '0';
        } else {
            d[i] += 1;
            carry = false;
        }
    }
    if (carry) {
        d.insert(d.begin(), '1');
        d.pop_back();
        ++exp;
    }
    std::string m = d.substr(0, 1) + (digits > 1 ? "." + d.substr(1) : "");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%se%lld", x.sign < 0 ? "-" : "", m.c_str(),
                  exp);
    return std::string(buf);
}

}  // namespace mx
