#include "core/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace mx {

GRat operator+(const GRat& x, const GRat& y) { return GRat(Rat(x.re + y.re), Rat(x.im + y.im)); }
GRat operator-(const GRat& x, const GRat& y) { return GRat(Rat(x.re - y.re), Rat(x.im - y.im)); }

GRat operator*(const GRat& x, const GRat& y) {
    return GRat(Rat(x.re * y.re - x.im * y.im), Rat(x.re * y.im + x.im * y.re));
}

GRat operator/(const GRat& x, const GRat& y) {
    Rat d = y.re * y.re + y.im * y.im;
    if (d == 0) throw std::domain_error("GRat division by zero");
    return GRat(Rat((x.re * y.re + x.im * y.im) / d), Rat((x.im * y.re - x.re * y.im) / d));
}

bool operator==(const GRat& x, const GRat& y) { return x.re == y.re && x.im == y.im; }

Rat rat_from_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty number");
    size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') { neg = s[i] == '-'; ++i; }
    std::string digits;
    long long frac_digits = 0;
    bool seen_point = false, any = false;
    long long exp10 = 0;
    for (; i < s.size(); ++i) {
        char ch = s[i];
        if (ch == '.') {
            if (seen_point) throw std::invalid_argument("bad number: " + s);
            seen_point = true;
        } else if (ch >= '0' && ch <= '9') {
            digits.push_back(ch);
            if (seen_point) ++frac_digits;
            any = true;
        } else if (ch == 'e' || ch == 'E') {
            exp10 = std::atoll(s.c_str() + i + 1);
            // validate exponent tail
            size_t j = i + 1;
            if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
            if (j >= s.size()) throw std::invalid_argument("bad number: " + s);
            for (; j < s.size(); ++j)
                if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("bad number: " + s);
            break;
        } else {
            throw std::invalid_argument("bad number: " + s);
        }
    }
    if (!any) throw std::invalid_argument("bad number: " + s);
    // base must be explicit: leading zeros would otherwise trigger the
    // base-0 auto-detection and read the digits as octal
    mpz_class num(digits.empty() ? "0" : digits, 10);
    if (neg) num = -num;
    long long e = exp10 - frac_digits;
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, (unsigned long)std::llabs(e));
    Rat r;
    if (e >= 0) r = Rat(num * p10);
    else r = Rat(num, p10);
    r.canonicalize();
    return r;
}

ScaledReal scaled_from_rat(const Rat& x) {
    if (x == 0) return scaled_zero();
    int sign = sgn(x) > 0 ? 1 : -1;
    mpq_class ax = abs(x);
    mpf_class f(ax, 256);
    mp_exp_t e10;
    std::string digits = f.get_str(e10, 10, 30);  // value = 0.digits * 10^e10
    while (digits.size() < 18) digits.push_back('0');
    ScaledReal r;
    r.sign = sign;
    r.mantissa = digits.substr(0, 1) + "." + digits.substr(1);
    double m = std::strtod(r.mantissa.c_str(), nullptr);
    r.log10_mag = (double)(e10 - 1) + std::log10(m);
    return r;
}

LogComplex lc_from_grat(const GRat& x) {
    if (x.is_zero()) return lc_zero();
    if (x.im == 0) return lc_from_scaled(scaled_from_rat(x.re));
    Rat mod2 = x.re * x.re + x.im * x.im;
    ScaledReal m2 = scaled_from_rat(mod2);
    double log_mag = 0.5 * m2.log10_mag * 2.302585092994045684;
    ScaledReal sr = scaled_from_rat(x.re), si = scaled_from_rat(x.im);
    double lr = sr.sign ? sr.log10_mag : -HUGE_VAL;
    double li = si.sign ? si.log10_mag : -HUGE_VAL;
    double L = std::max(lr, li);
    double vr = sr.sign ? sr.sign * std::pow(10.0, lr - L) : 0.0;
    double vi = si.sign ? si.sign * std::pow(10.0, li - L) : 0.0;
    return LogComplex{log_mag, std::atan2(vi, vr)};
}

double rat_to_double(const Rat& x) { return x.get_d(); }

cplx grat_to_cplx(const GRat& x) { return cplx(x.re.get_d(), x.im.get_d()); }

}  // namespace mx
