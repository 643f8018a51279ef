#include <lacuna/complexfn.hpp>

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <tuple>

namespace lacuna::complexfn {
namespace {

using cplx = std::complex<double>;

constexpr double kHalfLogTwoPi = 0.91893853320467274178;  // log(2*pi)/2

// B_{2n} / ((2n-1)(2n)): coefficients of the Stirling tail sum c_n z^{1-2n}.
constexpr double kStirling[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
};

// Stirling series, valid once re(z) >= 10.  Every log here is a principal
// log of a value in the right half-plane, so the imaginary part is
// continuous in im(z) and vanishes on the real axis.
cplx log_gamma_stirling(cplx z) {
    cplx lz = std::log(z);
    cplx acc = (z - 0.5) * lz - z + kHalfLogTwoPi;
    cplx zinv = 1.0 / z;
    cplx zpow = zinv;
    cplx z2inv = zinv * zinv;
    for (double c : kStirling) {
        acc += c * zpow;
        zpow *= z2inv;
    }
    return acc;
}

}  // namespace

ComplexValue log_gamma(ComplexValue zv) {
    if (!std::isfinite(zv.re) || !std::isfinite(zv.im)) {
        throw std::domain_error("complexfn: log_gamma requires finite components");
    }
    if (zv.re < 0.5) {
        throw std::domain_error("complexfn: log_gamma requires re(z) >= 0.5");
    }
    cplx z(zv.re, zv.im);
    // Shift into the Stirling region; subtract the recurrence logs afterwards.
    cplx shift_log = 0.0;
    int shifted = 0;
    while (z.real() < 10.0) {
        shift_log += std::log(z);
        z += 1.0;
        ++shifted;
    }
    cplx r = log_gamma_stirling(z);
    if (shifted > 0) r -= shift_log;
    return {r.real(), r.imag()};
}

double gamma_modulus_exact(double y) {
    if (!(y > 0.0) || !std::isfinite(y)) {
        throw std::domain_error("complexfn: gamma_modulus_exact requires y > 0");
    }
    double py = std::numbers::pi_v<double> * y;
    if (py >= 710.0) {  // sinh overflows near 710.47
        throw std::overflow_error("complexfn: sinh(pi*y) overflows; modulus below double range");
    }
    return std::sqrt(py / std::sinh(py));
}

GammaCharacter gamma_character(double a, int k) {
    if (!(a > 1.0) || !std::isfinite(a)) {
        throw std::domain_error("complexfn: gamma_character requires a > 1");
    }
    if (k < 1) {
        throw std::domain_error("complexfn: gamma_character requires k >= 1");
    }
    GammaCharacter c;
    c.k = k;
    c.theta_k = 2.0 * std::numbers::pi_v<double> * static_cast<double>(k) / std::log(a);
    c.value_log = log_gamma({1.0, c.theta_k});
    c.modulus = std::exp(c.value_log.re);
    double arg = c.value_log.im;
    double phase = std::remainder(arg, 2.0 * std::numbers::pi_v<double>);
    if (phase <= -std::numbers::pi_v<double>) phase += 2.0 * std::numbers::pi_v<double>;
    c.phase = phase;
    c.value = {c.modulus * std::cos(arg), c.modulus * std::sin(arg)};
    return c;
}

const std::vector<GammaCharacter>& character_sequence(double a, double eps_modulus, int k_max) {
    if (!(a > 1.0) || !std::isfinite(a)) {
        throw std::domain_error("complexfn: character_sequence requires a > 1");
    }
    if (!(eps_modulus > 0.0) || k_max < 1) {
        throw std::domain_error("complexfn: character_sequence requires eps_modulus > 0 and k_max >= 1");
    }
    using Key = std::tuple<double, double, int>;
    static std::mutex mu;
    static std::map<Key, std::vector<GammaCharacter>> memo;

    Key key{a, eps_modulus, k_max};
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    std::vector<GammaCharacter> seq;
    for (int k = 1; k <= k_max; ++k) {
        GammaCharacter c = gamma_character(a, k);
        if (c.modulus < eps_modulus) break;
        seq.push_back(c);
    }
    return memo.emplace(key, std::move(seq)).first->second;
}

}  // namespace lacuna::complexfn
