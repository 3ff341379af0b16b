#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "meixner/capi.h"

namespace {

struct Ctx {
    mx_ctx* p;
    Ctx(const char* c = "0.5", const char* b = "1.5", long n = 100)
        : p(mx_ctx_new(c, b, n)) {}
    ~Ctx() { mx_ctx_free(p); }
};

std::string six_digits(const mx_value& v) {
    char buf[64];
    double m = std::strtod(v.mantissa, nullptr);
    long long e = (long long)std::floor(v.log10_mag);
    std::snprintf(buf, sizeof buf, "%s%.5fe%lld", v.sign < 0 ? "-" : "", m, e);
    return std::string(buf);
}

}  // namespace

TEST_CASE("evaluate both methods at a reference point") {
    Ctx c;
    mx_result r;
    REQUIRE(mx_eval(c.p, "-1", nullptr, MX_WANT_EXACT | MX_WANT_ASYM, &r) ==
            MX_OK);
    CHECK(r.has_exact);
    CHECK(r.has_asym);
    CHECK(six_digits(r.exact) == "1.99529e233");
    CHECK(six_digits(r.asym) == "1.99473e233");
    CHECK(r.rel_err == doctest::Approx(2.8e-4).epsilon(0.05));
    CHECK(std::strcmp(r.region, "Outer") == 0);
    CHECK(std::strcmp(r.formula, "O4") == 0);
}

TEST_CASE("degree zero is the constant one") {
    Ctx c("0.5", "1.5", 0);
    mx_result r;
    REQUIRE(mx_eval(c.p, "0", nullptr, MX_WANT_EXACT, &r) == MX_OK);
    CHECK(r.exact.sign == 1);
    CHECK(r.exact.log10_mag == doctest::Approx(0.0));
    // but the asymptotic engine needs n >= 1
    CHECK(mx_eval(c.p, "0.5", nullptr, MX_WANT_ASYM, &r) == MX_ERR_DOMAIN);
}

TEST_CASE("complex evaluation") {
    Ctx c;
    mx_result r;
    REQUIRE(mx_eval(c.p, "2", "0.5", MX_WANT_EXACT | MX_WANT_ASYM, &r) ==
            MX_OK);
    CHECK(r.exact.is_complex);
    CHECK(r.asym.is_complex);
    CHECK(r.rel_err < 5e-3);
    CHECK(std::strcmp(r.region, "Outer") == 0);  // |Im z| above the strip
    CHECK(std::strcmp(r.formula, "O4") == 0);
}

TEST_CASE("error paths and messages") {
    Ctx bad("1.25", "1.5", 100);
    mx_result r;
    CHECK(mx_eval(bad.p, "1", nullptr, MX_WANT_EXACT, &r) == MX_ERR_PARSE);
    CHECK(std::strlen(mx_last_error(bad.p)) > 0);

    Ctx c;
    CHECK(mx_eval(c.p, "zzz", nullptr, MX_WANT_EXACT, &r) == MX_ERR_PARSE);
    CHECK(mx_eval(c.p, nullptr, nullptr, MX_WANT_EXACT, &r) == MX_ERR_PARSE);
    CHECK(mx_eval(c.p, "1", nullptr, 0, &r) == MX_ERR_PARSE);
    CHECK(mx_set_geometry(c.p, 0.2, 0.1) == MX_ERR_PARSE);
    CHECK(mx_set_quad_tol(c.p, -1.0) == MX_ERR_PARSE);
}

TEST_CASE("classification") {
    Ctx c;
    char buf[32];
    REQUIRE(mx_classify(c.p, 0.05, 0.0, buf, sizeof buf) == MX_OK);
    CHECK(std::strcmp(buf, "StripLeft") == 0);
    REQUIRE(mx_classify(c.p, 5.83, 0.0, buf, sizeof buf) == MX_OK);
    CHECK(std::strcmp(buf, "AiryB") == 0);
    REQUIRE(mx_classify(c.p, -1.0, 0.0, buf, sizeof buf) == MX_OK);
    CHECK(std::strcmp(buf, "Outer") == 0);
    // geometry override moves the disk edge
    REQUIRE(mx_set_geometry(c.p, 0.005, 0.01) == MX_OK);
    REQUIRE(mx_classify(c.p, 0.171, 0.0, buf, sizeof buf) == MX_OK);
    CHECK(std::strcmp(buf, "AiryA") == 0);
    REQUIRE(mx_classify(c.p, 0.15, 0.0, buf, sizeof buf) == MX_OK);
    CHECK(std::strcmp(buf, "StripLeft") == 0);
}

namespace {

struct VerifyCount {
    int total = 0;
    int failed = 0;
    std::vector<std::string> failed_names;
};

void count_cb(const char* name, double, double, int pass, const char*,
              void* user) {
    VerifyCount* vc = (VerifyCount*)user;
    ++vc->total;
    if (!pass) {
        ++vc->failed;
        vc->failed_names.push_back(name);
    }
}

}  // namespace

TEST_CASE("verify passes clean and fails under fault injection") {
    Ctx c;
    VerifyCount clean;
    CHECK(mx_verify(c.p, 0, count_cb, &clean) == MX_OK);
    CHECK(clean.total > 20);
    CHECK(clean.failed == 0);

    VerifyCount faulty;
    CHECK(mx_verify(c.p, 1, count_cb, &faulty) == MX_ERR_VERIFY);
    CHECK(faulty.failed > 0);
    bool scalar_failed = false;
    for (const std::string& s : faulty.failed_names)
        if (s == "scalar-identity") scalar_failed = true;
    CHECK(scalar_failed);
}

TEST_CASE("other parameter sets stay consistent") {
    for (auto pr : {std::pair<const char*, const char*>{"0.25", "1.0"},
                    {"0.75", "1.875"}}) {
        Ctx c(pr.first, pr.second, 60);
        mx_result r;
        REQUIRE(mx_eval(c.p, "-0.5", nullptr, MX_WANT_EXACT | MX_WANT_ASYM,
                        &r) == MX_OK);
        CHECK(r.rel_err < 2e-2);
    }
}
