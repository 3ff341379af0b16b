// Command-line front end: single-point evaluation, the ten-row reference
// table, grid scans emitting CSV/JSON, and the identity-verification suite.
// Links only the C API.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "meixner/capi.h"

using nlohmann::json;

namespace {

struct RunConfig {
    std::string c = "0.5";
    std::string beta = "1.5";
    long n = 100;
    double epsilon = 0.0;
    double delta = 0.0;
    double quad_tol = 1e-12;
    std::string format = "text";  // text|csv|json
    std::string out;              // empty -> stdout
};

// Frozen reference values for c=0.5, beta=1.5, n=100 (six significant
// digits). The z=0.001 reference value is corrected: the original reference
// table has 3.07930e187 where the exact rational evaluation (two
// independent implementations) gives 3.07830e187; the printed approximate
// value 3.07272e187 is consistent with the corrected number.
struct TableRow {
    const char* z;
    const char* exact_ref;
    const char* asym_ref;
    bool corrected;
};

const TableRow kTable[] = {
    {"-1", "1.99529e233", "1.99473e233", false},
    {"-0.001", "8.36624e187", "8.35137e187", false},
    {"0.001", "3.07830e187", "3.07272e187", true},
    {"0.05", "-2.51701e180", "-2.51507e180", false},
    {"0.171", "-9.12697e174", "-9.12530e174", false},
    {"0.172", "-1.22035e175", "-1.22003e175", false},
    {"2", "-4.71541e201", "-4.70772e201", false},
    {"5.828", "2.78146e259", "2.78231e259", false},
    {"5.829", "2.86933e259", "2.87018e259", false},
    {"100", "2.16586e399", "2.16586e399", false},
};

const char kCsvHeader[] =
    "z_re,z_im,region,formula,exact_sign,exact_log10,asym_sign,asym_log10,"
    "rel_err,err_estimate";

// Render sign/mantissa/exponent to N significant digits with carry-aware
// rounding (9.99999... must bump the exponent).
std::string value_str(const mx_value& v, int digits) {
    if (v.is_complex) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "(log10|.|=%.*g, phase=%.*g)", digits,
                      v.log10_mag, digits, v.phase);
        return std::string(buf);
    }
    if (v.sign == 0) return "0";
    double m = std::strtod(v.mantissa, nullptr);
    long long e = (long long)std::floor(v.log10_mag);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits - 1, m);
    std::string s(buf);
    if (s.rfind("10", 0) == 0) {  // rounded past 10
        ++e;
        std::snprintf(buf, sizeof buf, "1.%0*d", digits - 1, 0);
        s = buf;
    }
    std::snprintf(buf, sizeof buf, "%s%se%lld", v.sign < 0 ? "-" : "",
                  s.c_str(), e);
    return std::string(buf);
}

// Relative difference between a computed value and a printed 6-digit
// reference, both real.
double ref_rel_err(const mx_value& v, const std::string& ref) {
    // split at the 'e' by hand: %lf would swallow the whole scientific form,
    // and the exponents here overflow a double anyway
    size_t epos = ref.find_first_of("eE");
    double rm = std::strtod(ref.substr(0, epos).c_str(), nullptr);
    long long re_ = epos == std::string::npos
                        ? 0
                        : std::atoll(ref.c_str() + epos + 1);
    int rs = rm < 0 ? -1 : 1;
    rm = std::fabs(rm);
    if (v.sign == 0) return HUGE_VAL;
    double m = std::strtod(v.mantissa, nullptr) * v.sign;
    long long e = (long long)std::floor(v.log10_mag);
    if (e != re_) {
        m *= std::pow(10.0, (double)(e - re_));
    }
    return std::fabs(m / (rs * rm) - 1.0);
}

json value_json(const mx_value& v) {
    json j;
    j["is_complex"] = v.is_complex != 0;
    if (v.is_complex) {
        double e = std::floor(v.log10_mag);
        j["exponent"] = (long long)e;
        j["mantissa_mag"] = std::pow(10.0, v.log10_mag - e);
        j["phase"] = v.phase;
    } else {
        j["sign"] = v.sign;
        if (v.sign == 0) {
            j["mantissa"] = 0.0;
            j["exponent"] = 0;
        } else {
            j["mantissa"] = std::strtod(v.mantissa, nullptr);
            j["exponent"] = (long long)std::floor(v.log10_mag);
        }
    }
    return j;
}

json row_json(const std::string& z_re, const std::string& z_im,
              const mx_result& r) {
    json j;
    j["z_re"] = z_re;
    j["z_im"] = z_im.empty() ? "0" : z_im;
    if (r.has_asym) {
        j["region"] = r.region;
        j["formula"] = r.formula;
        j["asym"] = value_json(r.asym);
        j["err_estimate"] = r.err_estimate;
        j["cancellation"] = r.cancellation != 0;
    }
    if (r.has_exact) j["exact"] = value_json(r.exact);
    if (r.rel_err >= 0.0) j["rel_err"] = r.rel_err;
    return j;
}

void csv_row(std::ostream& os, const std::string& z_re,
             const std::string& z_im, const mx_result& r) {
    char buf[64];
    os << z_re << ',' << (z_im.empty() ? "0" : z_im) << ','
       << (r.has_asym ? r.region : "") << ','
       << (r.has_asym ? r.formula : "") << ',';
    if (r.has_exact && !r.exact.is_complex) {
        std::snprintf(buf, sizeof buf, "%d,%.15g,", r.exact.sign,
                      r.exact.log10_mag);
        os << buf;
    } else {
        os << ",,";
    }
    if (r.has_asym && !r.asym.is_complex) {
        std::snprintf(buf, sizeof buf, "%d,%.15g,", r.asym.sign,
                      r.asym.log10_mag);
        os << buf;
    } else {
        os << ",,";
    }
    if (r.rel_err >= 0.0) {
        std::snprintf(buf, sizeof buf, "%.6g", r.rel_err);
        os << buf;
    }
    os << ',';
    if (r.has_asym) {
        std::snprintf(buf, sizeof buf, "%.6g", r.err_estimate);
        os << buf;
    }
    os << '\n';
}

// Split "RE" or "RE,IM" into decimal strings.
bool split_z(const std::string& z, std::string& re, std::string& im) {
    size_t comma = z.find(',');
    re = z.substr(0, comma);
    im = comma == std::string::npos ? "" : z.substr(comma + 1);
    return !re.empty();
}

struct CtxGuard {
    mx_ctx* ctx = nullptr;
    ~CtxGuard() { mx_ctx_free(ctx); }
};

int make_ctx(const RunConfig& cfg, CtxGuard& g) {
    g.ctx = mx_ctx_new(cfg.c.c_str(), cfg.beta.c_str(), cfg.n);
    if (!g.ctx) {
        std::cerr << "error: out of memory\n";
        return 3;
    }
    if (mx_set_geometry(g.ctx, cfg.epsilon, cfg.delta) != MX_OK ||
        mx_set_quad_tol(g.ctx, cfg.quad_tol) != MX_OK) {
        std::cerr << "error: " << mx_last_error(g.ctx) << '\n';
        return 2;
    }
    return 0;
}

struct OutGuard {
    std::ofstream file;
    std::ostream* os = &std::cout;
    int open(const std::string& path) {
        if (path.empty()) return 0;
        file.open(path);
        if (!file) {
            std::cerr << "error: cannot open " << path << '\n';
            return 4;
        }
        os = &file;
        return 0;
    }
};

int cmd_eval(const RunConfig& cfg, const std::string& z,
             const std::string& method) {
    CtxGuard g;
    if (int rc = make_ctx(cfg, g)) return rc;
    std::string re, im;
    if (!split_z(z, re, im)) {
        std::cerr << "error: bad z\n";
        return 2;
    }
    int what = method == "exact"  ? MX_WANT_EXACT
               : method == "asym" ? MX_WANT_ASYM
                                  : MX_WANT_EXACT | MX_WANT_ASYM;
    mx_result r;
    mx_status st =
        mx_eval(g.ctx, re.c_str(), im.empty() ? nullptr : im.c_str(), what, &r);
    if (st != MX_OK) {
        std::cerr << "error: " << mx_last_error(g.ctx) << '\n';
        return (int)st;
    }
    OutGuard out;
    if (int rc = out.open(cfg.out)) return rc;
    if (cfg.format == "json") {
        *out.os << row_json(re, im, r).dump(2) << '\n';
    } else if (cfg.format == "csv") {
        *out.os << kCsvHeader << '\n';
        csv_row(*out.os, re, im, r);
    } else {
        *out.os << "z = " << re << (im.empty() ? "" : " + i " + im) << '\n';
        if (r.has_asym)
            *out.os << "region " << r.region << ", formula " << r.formula
                    << '\n';
        if (r.has_exact)
            *out.os << "exact        " << value_str(r.exact, 6) << '\n';
        if (r.has_asym) {
            *out.os << "asym         " << value_str(r.asym, 6) << '\n';
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3g", r.err_estimate);
            *out.os << "err_estimate " << buf << '\n';
            if (r.cancellation)
                *out.os << "warning: near a polynomial zero, relative "
                           "accuracy degrades\n";
        }
        if (r.rel_err >= 0.0) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3g", r.rel_err);
            *out.os << "rel_err      " << buf << '\n';
        }
    }
    return 0;
}

int cmd_table(const RunConfig& cfg) {
    CtxGuard g;
    if (int rc = make_ctx(cfg, g)) return rc;
    OutGuard out;
    if (int rc = out.open(cfg.out)) return rc;
    bool all_ok = true;
    json jrows = json::array();
    if (cfg.format == "csv") *out.os << kCsvHeader << '\n';
    if (cfg.format == "text")
        *out.os << "# reference table, c=" << cfg.c << " beta=" << cfg.beta
                << " n=" << cfg.n << '\n'
                << "#      z        exact         asym      rel_err  status\n";
    for (const TableRow& row : kTable) {
        mx_result r;
        mx_status st =
            mx_eval(g.ctx, row.z, nullptr, MX_WANT_EXACT | MX_WANT_ASYM, &r);
        if (st != MX_OK) {
            std::cerr << "error: " << mx_last_error(g.ctx) << '\n';
            return (int)st;
        }
        double de = ref_rel_err(r.exact, row.exact_ref);
        double da = ref_rel_err(r.asym, row.asym_ref);
        bool ok = de <= 5e-6 && da <= 1e-4 && r.rel_err <= 5e-3;
        all_ok = all_ok && ok;
        if (cfg.format == "json") {
            json j = row_json(row.z, "", r);
            j["ref_exact"] = row.exact_ref;
            j["ref_asym"] = row.asym_ref;
            j["ref_corrected"] = row.corrected;
            j["within_tolerance"] = ok;
            jrows.push_back(j);
        } else if (cfg.format == "csv") {
            csv_row(*out.os, row.z, "", r);
        } else {
            char buf[160];
            std::snprintf(buf, sizeof buf, "%8s %12s %12s   %8.2e  %s%s\n",
                          row.z, value_str(r.exact, 6).c_str(),
                          value_str(r.asym, 6).c_str(), r.rel_err,
                          ok ? "ok" : "MISS",
                          row.corrected ? "  (reference corrected)" : "");
            *out.os << buf;
        }
    }
    if (cfg.format == "json") *out.os << jrows.dump(2) << '\n';
    return all_ok ? 0 : 5;
}

// Exact decimal arithmetic on the grid so every point stays rational: the
// step is formed in scaled integers (from, to and the count define it).
std::string grid_point(const std::string& from, const std::string& to, int k,
                       int points);

long long pow10ll(int d) {
    long long r = 1;
    while (d-- > 0) r *= 10;
    return r;
}

bool parse_fixed(const std::string& s, long long& units, int& frac_digits) {
    // decimal without exponent -> integer in units of 10^-frac_digits
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    std::string digits;
    int fd = 0;
    bool seen = false, any = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '.') {
            if (seen) return false;
            seen = true;
        } else if (s[i] >= '0' && s[i] <= '9') {
            digits.push_back(s[i]);
            if (seen) ++fd;
            any = true;
        } else {
            return false;
        }
    }
    if (!any || digits.size() > 15) return false;
    units = std::strtoll(digits.c_str(), nullptr, 10);
    if (neg) units = -units;
    frac_digits = fd;
    return true;
}

std::string fixed_str(long long units, int frac_digits) {
    bool neg = units < 0;
    long long a = neg ? -units : units;
    long long p = pow10ll(frac_digits);
    char buf[48];
    if (frac_digits == 0)
        std::snprintf(buf, sizeof buf, "%s%lld", neg ? "-" : "", a);
    else
        std::snprintf(buf, sizeof buf, "%s%lld.%0*lld", neg ? "-" : "", a / p,
                      frac_digits, a % p);
    return std::string(buf);
}

int cmd_scan(const RunConfig& cfg, const std::string& from,
             const std::string& to, int points) {
    CtxGuard g;
    if (int rc = make_ctx(cfg, g)) return rc;
    long long uf, ut;
    int df, dt;
    if (!parse_fixed(from, uf, df) || !parse_fixed(to, ut, dt) || points < 2) {
        std::cerr << "error: scan needs decimal --from < --to and points >= 2\n";
        return 2;
    }
    // common fixed-point scale for the endpoints, refined so the step is exact
    int d = std::max(df, dt);
    uf *= pow10ll(d - df);
    ut *= pow10ll(d - dt);
    if (uf >= ut) {
        std::cerr << "error: scan needs from < to\n";
        return 2;
    }
    long long span = ut - uf;
    int extra = 0;
    while (extra < 6 && (span * pow10ll(extra)) % (points - 1) != 0) ++extra;
    uf *= pow10ll(extra);
    ut *= pow10ll(extra);
    d += extra;
    long long step = (ut - uf) / (points - 1);  // may truncate if extra hit 6
    OutGuard out;
    if (int rc = out.open(cfg.out)) return rc;
    json jrows = json::array();
    if (cfg.format != "json") {
        *out.os << "# scan from " << from << " to " << to << " points "
                << points << ", c=" << cfg.c << " beta=" << cfg.beta
                << " n=" << cfg.n << '\n'
                << kCsvHeader << '\n';
    }
    for (int k = 0; k < points; ++k) {
        long long u = k + 1 == points ? ut : uf + step * k;
        std::string zs = fixed_str(u, d);
        mx_result r;
        mx_status st =
            mx_eval(g.ctx, zs.c_str(), nullptr, MX_WANT_EXACT | MX_WANT_ASYM, &r);
        if (st != MX_OK) {
            std::cerr << "error: " << mx_last_error(g.ctx) << " at z=" << zs
                      << '\n';
            return (int)st;
        }
        if (cfg.format == "json") jrows.push_back(row_json(zs, "", r));
        else csv_row(*out.os, zs, "", r);
    }
    if (cfg.format == "json") *out.os << jrows.dump(2) << '\n';
    return 0;
}

struct VerifySink {
    std::ostream* os;
    bool json_mode;
    json rows = json::array();
};

void verify_line(const char* name, double residual, double tol, int pass,
                 const char* detail, void* user) {
    VerifySink* sink = (VerifySink*)user;
    if (sink->json_mode) {
        json j;
        j["name"] = name;
        j["residual"] = residual;
        j["tol"] = tol;
        j["pass"] = pass != 0;
        if (*detail) j["detail"] = detail;
        sink->rows.push_back(j);
        return;
    }
    char buf[192];
    std::snprintf(buf, sizeof buf, "%-24s %-4s residual=%.3e tol=%.0e  %s\n",
                  name, pass ? "ok" : "FAIL", residual, tol, detail);
    *sink->os << buf;
}

int cmd_verify(const RunConfig& cfg, bool inject) {
    CtxGuard g;
    if (int rc = make_ctx(cfg, g)) return rc;
    OutGuard out;
    if (int rc = out.open(cfg.out)) return rc;
    VerifySink sink{out.os, cfg.format == "json"};
    mx_status st = mx_verify(g.ctx, inject ? 1 : 0, verify_line, &sink);
    if (sink.json_mode) *out.os << sink.rows.dump(2) << '\n';
    if (st == MX_OK) {
        if (!sink.json_mode) *out.os << "all checks passed\n";
        return 0;
    }
    if (st == MX_ERR_VERIFY) {
        if (!sink.json_mode) *out.os << "FAILED\n";
        return 5;
    }
    std::cerr << "error: " << mx_last_error(g.ctx) << '\n';
    return (int)st;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Meixner polynomial evaluation: exact reference values and "
                 "uniform large-degree approximations"};
    app.require_subcommand(1);
    app.set_config("--config")->configurable(false);
    app.add_option("--c", cfg.c, "parameter c in (0,1), decimal string");
    app.add_option("--beta", cfg.beta, "parameter beta in [1,2), decimal string");
    app.add_option("--n", cfg.n, "polynomial degree");
    app.add_option("--epsilon", cfg.epsilon, "turning-point disk radius");
    app.add_option("--delta", cfg.delta, "strip half-height");
    app.add_option("--quad-tol", cfg.quad_tol, "quadrature tolerance");
    app.add_option("--format", cfg.format, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--out", cfg.out, "output path (default stdout)");
    app.fallthrough();

    std::string z, method = "both", from, to;
    int points = 2;
    bool inject = false;

    CLI::App* eval = app.add_subcommand("eval", "evaluate at one point");
    eval->add_option("--z", z, "point: RE or RE,IM decimal strings")
        ->required();
    eval->add_option("--method", method, "exact|asym|both")
        ->check(CLI::IsMember({"exact", "asym", "both"}));

    CLI::App* table =
        app.add_subcommand("table", "ten-row reference table regression");

    CLI::App* scan = app.add_subcommand("scan", "real-interval grid scan");
    scan->add_option("--from", from, "left endpoint (decimal)")->required();
    scan->add_option("--to", to, "right endpoint (decimal)")->required();
    scan->add_option("--points", points, "grid size >= 2")->required();

    CLI::App* verify = app.add_subcommand("verify", "identity suites");
    verify->add_flag("--inject-fault", inject,
                     "negate a phase internally; the scalar-identity suite "
                     "must then fail (harness self-test)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // help/version exit 0, parse errors exit 2
    }

    if (eval->parsed()) return cmd_eval(cfg, z, method);
    if (table->parsed()) return cmd_table(cfg);
    if (scan->parsed()) return cmd_scan(cfg, from, to, points);
    if (verify->parsed()) return cmd_verify(cfg, inject);
    return 2;
}
