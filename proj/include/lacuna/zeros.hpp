#pragma once

#include <vector>

#include <lacuna/delta.hpp>
#include <lacuna/series.hpp>

namespace lacuna::zeros {

using series::SeriesParams;

// A zero stored as w = 1 - x and s = ln w.  Root-finding happens in s, where
// the oscillation has uniform zero spacing (log a)/2; x is derived for
// display and must not feed arithmetic once w < 1e-8.
struct ZeroLocation {
    double w = 0.0;
    double s = 0.0;
    double x = 0.0;

    static ZeroLocation from_w(double w);
    static ZeroLocation from_s(double s);
};

struct ZeroTableRow {
    int n = 0;
    ZeroLocation zero_delta;   // zero of delta, w = 1 - e^{-w0}
    ZeroLocation zero_delta0;  // refined zero of delta0
    double x_delta = 0.0;      // display copies of the x coordinates
    double x_delta0 = 0.0;
    double rel_err = 0.0;      // |(x_delta - x_delta0) / (1 - x_delta)|
};

// Bisection for delta0(e^s) = 0 on a sign-change bracket [s_lo, s_hi].
// Deterministic; final bracket width <= max(1e-14, a few ulps of s).
ZeroLocation refine_zero_delta0(double s_lo, double s_hi, const SeriesParams& params);

// The unique zero of delta0 with w in (a^-1/2, 1): dense scan of the window
// in s for a sign change, then refinement.
ZeroLocation fundamental_zero_delta0(const SeriesParams& params);

// Dominant-term estimate of the fundamental zero:
// s = (arg Gamma(1+i*theta_1) - pi/2) / theta_1 on the continuous branch,
// shifted by multiples of (log a)/2 into the window (a^-1/2, 1].
ZeroLocation closed_form_first_zero(double a);

// w_n = w0 * a^(-n/2), computed in s to avoid underflow.
ZeroLocation zero_ladder(const ZeroLocation& w0, int n, double a);

// A zero of delta0 at w0 is a zero of delta at x = e^{-w0}: w = 1 - e^{-w0},
// via expm1 (no cancellation for small w0).
ZeroLocation map_zero_to_delta(const ZeroLocation& w0);

// Cubic maps between w_z = 1 - x_z (zero of delta) and w_z0 (zero of delta0):
// forward w + w^2/2 + w^3/3 truncates -ln(1-w); inverse w - w^2/2 + w^3/6
// truncates 1 - e^{-w}.  Both are order-4 accurate.
double taylor_map_z_to_z0(double wz);
double taylor_map_z0_to_z(double wz0);

// Bisection for delta_oracle(x) = 0 on [x_lo, x_hi] to width 1e-11 in x.
// Refuses brackets inside the oracle noise floor (1 - x < 1e-5).
ZeroLocation find_zero_delta_direct(double x_lo, double x_hi, const SeriesParams& params);

// Rows n = 0..count-1: zero_delta0 = ladder-seeded refined zero of delta0,
// zero_delta = exact map of that zero, rel_err = (w_delta0 - w_delta)/w_delta.
std::vector<ZeroTableRow> build_table(double a, int count, const SeriesParams& params);

}  // namespace lacuna::zeros
