#pragma once

namespace lacuna::series {

struct SeriesParams {
    double a = 2.0;         // base of the lacunary series, a > 1
    double eps_term = 1e-18;  // relative truncation threshold
    int k_max = 1024;       // harmonic cap for the character sum

    void validate() const;  // throws std::domain_error on bad fields
};

// f(x) = sum_{n in Z} a^n * x^(a^n), evaluated as (1/u) * sum phi(a^n * u)
// with phi(t) = t*exp(-t) and u = log(1/x).  Compensated summation; upward
// terms are dropped only after passing their peak (a^n * u > 1).
double f_bilateral(double x, const SeriesParams& params);

// g(x) = 1 / ((log a) * log(1/x)), the smooth reference f oscillates around.
double g_ref(double x, double a);

}  // namespace lacuna::series
