#include <lacuna/delta.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

#include <lacuna/complexfn.hpp>

namespace lacuna::delta {
namespace {

// ln(u) reduced to the fundamental period: returns ln(u * a^-m) with m the
// nearest integer to log_a(u).  The phase theta_k * ln(u) shifts by exact
// multiples of 2*pi*k, so r_sum is unchanged analytically; numerically the
// reduced log keeps theta_k * v small and, because the scaling is a product
// by a power of a (exact for a = 2), delta0's self-similarity and the
// periodicity in ln u survive to the last bit for a = 2.
double reduced_log(double u, double a) {
    double la = std::log(a);
    double m = std::round(std::log(u) / la);
    if (m != 0.0) {
        // two-stage scaling so a^-m never overflows for extreme u
        double m1 = std::trunc(m / 2.0);
        double m2 = m - m1;
        u = (u * std::pow(a, -m1)) * std::pow(a, -m2);
    }
    return std::log(u);
}

double check_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::domain_error(std::string("delta: ") + name + " must be > 0 and finite");
    }
    return v;
}

double log_inverse_checked(double x) {
    if (!(x > 0.0) || !(x < 1.0)) {
        throw std::domain_error("delta: x must be in (0, 1)");
    }
    double u = std::log(1.0 / x);
    if (!std::isfinite(u) || u <= 0.0) {
        throw std::domain_error("delta: log(1/x) not representable for this x");
    }
    return u;
}

}  // namespace

double r_sum(double u, const SeriesParams& params) {
    params.validate();
    check_positive(u, "u");
    const auto& chars = complexfn::character_sequence(params.a, params.eps_term, params.k_max);
    if (chars.empty()) return 0.0;
    double v = reduced_log(u, params.a);
    double acc = 0.0;
    for (const auto& c : chars) {
        double ph = c.theta_k * v;
        // Re[ Gamma_k * e^{-i*theta_k*v} ]; the -k term is the conjugate,
        // so the pair contributes twice this real part.
        acc += c.value.re * std::cos(ph) + c.value.im * std::sin(ph);
    }
    return 2.0 * acc;
}

double delta0(double w, const SeriesParams& params) {
    params.validate();
    check_positive(w, "w");
    return r_sum(w, params) / (std::log(params.a) * w);
}

double delta_of_x(double x, const SeriesParams& params) {
    params.validate();
    return delta0(log_inverse_checked(x), params);
}

double delta_oracle(double x, const SeriesParams& params) {
    return series::f_bilateral(x, params) - series::g_ref(x, params.a);
}

bool oracle_degraded(double x) {
    return (1.0 - x) < 1e-8;
}

DominantParams dominant_params(double a) {
    auto c = complexfn::gamma_character(a, 1);
    DominantParams dp;
    dp.theta_1 = c.theta_k;
    dp.b = 2.0 * c.modulus / std::log(a);
    dp.phi = -c.phase;
    return dp;
}

double delta0_dominant(double w, const SeriesParams& params) {
    params.validate();
    check_positive(w, "w");
    DominantParams dp = dominant_params(params.a);
    double v = reduced_log(w, params.a);
    return dp.b / w * std::cos(dp.theta_1 * v + dp.phi);
}

RemainderSample sample(double x, Route route, const SeriesParams& params) {
    RemainderSample smp;
    smp.x = x;
    smp.u = log_inverse_checked(x);
    smp.w = 1.0 - x;
    smp.route = route;
    switch (route) {
        case Route::oracle: smp.delta = delta_oracle(x, params); break;
        case Route::gamma_sum: smp.delta = delta_of_x(x, params); break;
        case Route::delta0_at_w: smp.delta = delta0(smp.w, params); break;
        case Route::dominant: smp.delta = delta0_dominant(smp.w, params); break;
    }
    return smp;
}

}  // namespace lacuna::delta
