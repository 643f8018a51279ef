#include <lacuna/series.hpp>

#include <cmath>
#include <stdexcept>

namespace lacuna::series {
namespace {

// log(1/x) for x in (0,1); rejects arguments whose reciprocal log is not a
// positive finite double (denormal x, or the last double below 1).
double log_inverse(double x) {
    if (!(x > 0.0) || !(x < 1.0)) {
        throw std::domain_error("series: x must be in (0, 1)");
    }
    double u = std::log(1.0 / x);
    if (!std::isfinite(u) || u <= 0.0) {
        throw std::domain_error("series: log(1/x) not representable for this x");
    }
    return u;
}

}  // namespace

void SeriesParams::validate() const {
    if (!(a > 1.0) || !std::isfinite(a)) {
        throw std::domain_error("series: base a must be > 1");
    }
    if (!(eps_term > 0.0) || !(eps_term < 1e-6)) {
        throw std::domain_error("series: eps_term must be in (0, 1e-6)");
    }
    if (k_max < 1) {
        throw std::domain_error("series: k_max must be >= 1");
    }
}

double f_bilateral(double x, const SeriesParams& params) {
    params.validate();
    const double u = log_inverse(x);
    const double a = params.a;
    const double eps = params.eps_term;

    double acc = 0.0, comp = 0.0;
    auto add = [&](double v) {
        double y = v - comp;
        double t = acc + y;
        comp = (t - acc) - y;
        acc = t;
    };

    // n >= 0: terms a^n * exp(-a^n * u) rise to a peak near a^n * u = 1,
    // then collapse doubly exponentially.  Never stop before the peak.
    double p = 1.0;
    for (;;) {
        double t = p * u;
        double term = p * std::exp(-t);
        add(term);
        if (t > 1.0 && term <= eps * acc) break;
        p *= a;
    }

    // n < 0: terms are bounded by a^n, a clean geometric envelope.
    double q = 1.0;
    for (;;) {
        q /= a;
        if (q <= eps * acc) break;
        add(q * std::exp(-q * u));
    }

    return acc;
}

double g_ref(double x, double a) {
    if (!(a > 1.0) || !std::isfinite(a)) {
        throw std::domain_error("series: base a must be > 1");
    }
    return 1.0 / (std::log(a) * log_inverse(x));
}

}  // namespace lacuna::series
