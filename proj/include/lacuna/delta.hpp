#pragma once

#include <lacuna/series.hpp>

namespace lacuna::delta {

using series::SeriesParams;

enum class Route { oracle, gamma_sum, delta0_at_w, dominant };

struct RemainderSample {
    double x = 0.0;      // abscissa in (0,1)
    double u = 0.0;      // log(1/x)
    double w = 0.0;      // 1 - x
    double delta = 0.0;  // remainder value produced by `route`
    Route route = Route::gamma_sum;
};

// Dominant (k = +-1) sinusoid of delta0: (b/w) * cos(theta_1 * ln w + phi).
struct DominantParams {
    double b = 0.0;        // amplitude coefficient 2*|Gamma(1+i*theta_1)|/log a
    double phi = 0.0;      // phase, realized as -arg Gamma(1+i*theta_1)
    double theta_1 = 0.0;  // 2*pi/log a
};

// 2 * sum_{k>=1} Re[ Gamma(1+i*theta_k) * exp(-i*theta_k*ln u) ].
// The +-k terms are conjugate, so the sum is real by construction.
// Periodic in ln u with period log a; the argument is phase-reduced
// multiplicatively (u * a^-m) before taking the log so that the periodicity
// and the self-similarity of delta0 hold to the last bit for a = 2.
double r_sum(double u, const SeriesParams& params);

// delta0(w) = r_sum(w) / ((log a) * w); w >= 1 permitted.
// Self-similar: delta0(w/a) = a * delta0(w).
double delta0(double w, const SeriesParams& params);

// delta(x) = delta0(log(1/x)): the two formulas are the same expression
// under w -> log(1/x).  Satisfies f(x) = g(x) + delta(x).
double delta_of_x(double x, const SeriesParams& params);

// Direct route f(x) - g(x).  Cancellation limits accuracy to roughly
// 10 ulps of g(x); see oracle_degraded for the w < 1e-8 warning region.
double delta_oracle(double x, const SeriesParams& params);

// True when 1 - x < 1e-8 and the oracle difference is dominated by rounding.
bool oracle_degraded(double x);

DominantParams dominant_params(double a);

double delta0_dominant(double w, const SeriesParams& params);

RemainderSample sample(double x, Route route, const SeriesParams& params);

}  // namespace lacuna::delta
