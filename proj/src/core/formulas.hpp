#ifndef MX_FORMULAS_HPP
#define MX_FORMULAS_HPP

// The seven large-n approximation formulas for the scaled monic polynomial
// pi_n(n z - beta/2), dispatched over the region partition. Values are
// returned in log scale; on the real axis they are additionally realified
// (the imaginary residue must vanish to ~1e-8 relative, which is asserted).

#include "core/auxfun.hpp"
#include "core/regions.hpp"
#include "core/scaled.hpp"

namespace mx {

enum class Formula { O4, O1, O0l, O0r, Oa, Ob, O2, O3 };

const char* formula_name(Formula f);

struct EvalOptions {
    double eps = 0.0;    // 0 -> RegionConfig::defaults
    double delta = 0.0;
    double quad_tol = 1e-12;
    // When true, the band evaluation also computes the alternative trig form
    // and records the relative difference (the two are analytically equal).
    bool band_cross_check = false;
    // Exact reduction of (n Re z - beta/2) mod 2 into [-1,1), when the caller
    // knows z as an exact rational. Otherwise fmod of the double product.
    bool have_phase = false;
    double phase_red = 0.0;
};

struct AsymptoticResult {
    LogComplex value;
    ScaledReal real_value;  // filled when z is on the real axis
    bool is_real = false;
    Region region;
    Formula formula = Formula::O4;
    double err_estimate = 0.0;  // relative: O(1/n) plus dropped O-terms
    bool cancellation_warning = false;  // trig factor below 10*err_estimate
    double band_check_resid = -1.0;     // set by band_cross_check
};

// Classify and evaluate with the region's formula.
AsymptoticResult evaluate(const AuxParams& p, cplx z, const EvalOptions& opt = {});

// Evaluate with a specific formula regardless of where z falls (each formula
// remains meaningful slightly outside its region; used by the overlap and
// equivalence checks). The recorded region is still the classified one.
AsymptoticResult evaluate_with(const AuxParams& p, cplx z, Formula f,
                               const EvalOptions& opt = {});

}  // namespace mx

#endif
