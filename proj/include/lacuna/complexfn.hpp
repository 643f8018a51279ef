#pragma once

#include <vector>

namespace lacuna::complexfn {

struct ComplexValue {
    double re = 0.0;
    double im = 0.0;
};

// The complex constant Gamma(1 + i*theta_k) weighting harmonic k, where
// theta_k = 2*k*pi/log(a).  phase is the principal argument in (-pi, pi];
// the branch-continuous argument (needed by the closed-form zero estimate)
// is value_log.im.
struct GammaCharacter {
    int k = 0;
    double theta_k = 0.0;
    ComplexValue value;
    ComplexValue value_log;  // log Gamma(1 + i*theta_k), continuous branch
    double modulus = 0.0;
    double phase = 0.0;
};

// log Gamma(z) for re(z) >= 0.5, imaginary part on the branch that is
// continuous along vertical lines and 0 at z = 1.  Accuracy ~1e-13 relative
// in exp(result) for |im z| <= 200.
ComplexValue log_gamma(ComplexValue z);

// |Gamma(1 + i*y)| via the exact identity sqrt(pi*y / sinh(pi*y)).
// Throws std::overflow_error instead of underflowing silently once
// sinh(pi*y) exceeds the double range.
double gamma_modulus_exact(double y);

GammaCharacter gamma_character(double a, int k);

// Characters k = 1, 2, ... until modulus < eps_modulus (hard cap k_max).
// Memoized per (a, eps_modulus, k_max); safe for concurrent callers.
const std::vector<GammaCharacter>& character_sequence(double a, double eps_modulus, int k_max);

}  // namespace lacuna::complexfn
