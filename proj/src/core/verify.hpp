#ifndef MX_VERIFY_HPP
#define MX_VERIFY_HPP

// Identity suites: every analytic relation the other modules rely on, run as
// one batch with measured residuals. The CLI's verify command prints this
// report; the acceptance tests gate on it.

#include <string>
#include <vector>

#include "core/auxfun.hpp"

namespace mx {

struct CheckResult {
    std::string name;
    double residual = 0.0;  // worst measured value
    double tol = 0.0;
    bool pass = false;
    std::string detail;  // where the worst case occurred
};

struct VerifyOptions {
    double quad_tol = 1e-12;
    // Mutation switch for testing the harness itself: negates phi-tilde inside
    // the scalar-identity suite, which must then fail.
    bool inject_phase_sign_flip = false;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass = true;
};

// Runs all suites with the given base parameters (several suites sweep n
// internally as the relations demand).
VerifyReport run_verify(const AuxParams& p, const VerifyOptions& opt = {});

}  // namespace mx

#endif
