#include <lacuna/zeros.hpp>

#include <cfloat>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <lacuna/complexfn.hpp>
#include <lacuna/errors.hpp>

namespace lacuna::zeros {
namespace {

constexpr int kMaxBisection = 200;

double delta0_at_s(double s, const SeriesParams& params) {
    return delta::delta0(std::exp(s), params);
}

// rel_err = (w0 - wd)/wd with wd = 1 - e^{-w0}.  The direct quotient loses
// half the digits once w0 is small (numerator ~ w0^2/2 versus rounding
// ~eps*w0), so switch to the series of w/(1-e^{-w}) - 1 there; the series
// form also keeps the column strictly monotone in w0 for deep rows.
double rel_err_from_w0(double w0) {
    if (w0 <= 0.02) {
        double w2 = w0 * w0;
        return w0 / 2.0 + w2 / 12.0 - w2 * w2 / 720.0;
    }
    double wd = -std::expm1(-w0);
    return (w0 - wd) / wd;
}

}  // namespace

ZeroLocation ZeroLocation::from_w(double w) {
    if (!(w > 0.0) || !std::isfinite(w)) {
        throw std::domain_error("zeros: w must be > 0 and finite");
    }
    ZeroLocation z;
    z.w = w;
    z.s = std::log(w);
    z.x = -std::expm1(z.s);
    return z;
}

ZeroLocation ZeroLocation::from_s(double s) {
    if (!std::isfinite(s)) {
        throw std::domain_error("zeros: s must be finite");
    }
    double w = std::exp(s);
    if (w == 0.0 || !std::isfinite(w)) {
        throw std::domain_error("zeros: exp(s) out of double range");
    }
    ZeroLocation z;
    z.w = w;
    z.s = s;
    z.x = -std::expm1(s);
    return z;
}

ZeroLocation refine_zero_delta0(double s_lo, double s_hi, const SeriesParams& params) {
    params.validate();
    if (!std::isfinite(s_lo) || !std::isfinite(s_hi)) {
        throw std::domain_error("zeros: bracket endpoints must be finite");
    }
    if (s_lo > s_hi) std::swap(s_lo, s_hi);

    double f_lo = delta0_at_s(s_lo, params);
    double f_hi = delta0_at_s(s_hi, params);
    if (f_lo == 0.0) return ZeroLocation::from_s(s_lo);
    if (f_hi == 0.0) return ZeroLocation::from_s(s_hi);
    if ((f_lo > 0.0) == (f_hi > 0.0)) {
        throw no_sign_change_error("zeros: delta0 has the same sign at both bracket endpoints");
    }

    for (int iter = 0; iter < kMaxBisection; ++iter) {
        double amax = std::max(std::fabs(s_lo), std::fabs(s_hi));
        if (s_hi - s_lo <= 1e-14 + 2.0 * DBL_EPSILON * amax) {
            return ZeroLocation::from_s(0.5 * (s_lo + s_hi));
        }
        double mid = 0.5 * (s_lo + s_hi);
        if (mid <= s_lo || mid >= s_hi) {  // no representable point between
            return ZeroLocation::from_s(mid <= s_lo ? s_lo : s_hi);
        }
        double f_mid = delta0_at_s(mid, params);
        if (f_mid == 0.0) return ZeroLocation::from_s(mid);
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            s_lo = mid;
            f_lo = f_mid;
        } else {
            s_hi = mid;
        }
    }
    throw non_convergence_error("zeros: bisection failed to converge within the iteration cap");
}

ZeroLocation fundamental_zero_delta0(const SeriesParams& params) {
    params.validate();
    const double half = 0.5 * std::log(params.a);
    const double s_dom = closed_form_first_zero(params.a).s;

    // Dense scan of the window s in (-half, 0]; pick the sign-change bracket
    // closest to the dominant-phase estimate.
    constexpr int n_scan = 2048;
    double best_lo = 0.0, best_hi = 0.0, best_dist = -1.0;
    double s_prev = -half * (1.0 - 0.5 / n_scan);
    double f_prev = delta0_at_s(s_prev, params);
    if (f_prev == 0.0) return ZeroLocation::from_s(s_prev);
    for (int i = 1; i < n_scan; ++i) {
        double s_cur = -half * (1.0 - (i + 0.5) / n_scan);
        double f_cur = delta0_at_s(s_cur, params);
        if (f_cur == 0.0) return ZeroLocation::from_s(s_cur);
        if ((f_cur > 0.0) != (f_prev > 0.0)) {
            double dist = std::fabs(0.5 * (s_prev + s_cur) - s_dom);
            if (best_dist < 0.0 || dist < best_dist) {
                best_dist = dist;
                best_lo = s_prev;
                best_hi = s_cur;
            }
        }
        s_prev = s_cur;
        f_prev = f_cur;
    }
    if (best_dist < 0.0) {
        throw no_sign_change_error("zeros: no sign change of delta0 in the fundamental window");
    }
    return refine_zero_delta0(best_lo, best_hi, params);
}

ZeroLocation closed_form_first_zero(double a) {
    if (!(a > 1.0) || !std::isfinite(a)) {
        throw std::domain_error("zeros: base a must be > 1");
    }
    auto c = complexfn::gamma_character(a, 1);
    // Dominant-term zero: theta_1*s - arg Gamma = -pi/2 (continuous branch),
    // then shift by half-periods into the window (a^-1/2, 1].
    double s_raw = (c.value_log.im - 0.5 * std::numbers::pi_v<double>) / c.theta_k;
    double half = 0.5 * std::log(a);
    double s = s_raw - std::ceil(s_raw / half) * half;
    if (s > 0.0) s -= half;
    if (s <= -half) s += half;
    return ZeroLocation::from_s(s);
}

ZeroLocation zero_ladder(const ZeroLocation& w0, int n, double a) {
    if (!(a > 1.0) || !std::isfinite(a)) {
        throw std::domain_error("zeros: base a must be > 1");
    }
    if (!(w0.w > 0.0) || n < 0) {
        throw std::domain_error("zeros: ladder requires w0 > 0 and n >= 0");
    }
    return ZeroLocation::from_s(w0.s - n * 0.5 * std::log(a));
}

ZeroLocation map_zero_to_delta(const ZeroLocation& w0) {
    if (!(w0.w > 0.0)) {
        throw std::domain_error("zeros: map requires w0 > 0");
    }
    return ZeroLocation::from_w(-std::expm1(-w0.w));
}

double taylor_map_z_to_z0(double wz) {
    if (!(wz > 0.0) || !(wz < 1.0)) {
        throw std::domain_error("zeros: taylor map argument must be in (0, 1)");
    }
    double w2 = wz * wz;
    return wz + w2 / 2.0 + w2 * wz / 3.0;
}

double taylor_map_z0_to_z(double wz0) {
    if (!(wz0 > 0.0) || !(wz0 < 1.0)) {
        throw std::domain_error("zeros: taylor map argument must be in (0, 1)");
    }
    double w2 = wz0 * wz0;
    return wz0 - w2 / 2.0 + w2 * wz0 / 6.0;
}

ZeroLocation find_zero_delta_direct(double x_lo, double x_hi, const SeriesParams& params) {
    params.validate();
    if (!(x_lo > 0.0) || !(x_hi < 1.0) || !(x_lo < x_hi)) {
        throw std::domain_error("zeros: bracket must satisfy 0 < x_lo < x_hi < 1");
    }
    if (1.0 - x_hi < 1e-5) {
        throw noise_floor_error("zeros: bracket within the cancellation noise floor of f - g");
    }
    double f_lo = delta::delta_oracle(x_lo, params);
    double f_hi = delta::delta_oracle(x_hi, params);
    if (f_lo == 0.0) return ZeroLocation::from_w(1.0 - x_lo);
    if (f_hi == 0.0) return ZeroLocation::from_w(1.0 - x_hi);
    if ((f_lo > 0.0) == (f_hi > 0.0)) {
        throw no_sign_change_error("zeros: delta oracle has the same sign at both bracket endpoints");
    }
    for (int iter = 0; iter < kMaxBisection; ++iter) {
        if (x_hi - x_lo <= 1e-11) {
            return ZeroLocation::from_w(1.0 - 0.5 * (x_lo + x_hi));
        }
        double mid = 0.5 * (x_lo + x_hi);
        if (mid <= x_lo || mid >= x_hi) {
            return ZeroLocation::from_w(1.0 - (mid <= x_lo ? x_lo : x_hi));
        }
        double f_mid = delta::delta_oracle(mid, params);
        if (f_mid == 0.0) return ZeroLocation::from_w(1.0 - mid);
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            x_lo = mid;
            f_lo = f_mid;
        } else {
            x_hi = mid;
        }
    }
    throw non_convergence_error("zeros: bisection failed to converge within the iteration cap");
}

std::vector<ZeroTableRow> build_table(double a, int count, const SeriesParams& params) {
    if (count < 1 || count > 200) {
        throw std::domain_error("zeros: count must be in [1, 200]");
    }
    SeriesParams p = params;
    p.a = a;
    p.validate();

    const double half = 0.5 * std::log(a);
    ZeroLocation z0 = fundamental_zero_delta0(p);

    std::vector<ZeroTableRow> rows;
    rows.reserve(count);
    for (int n = 0; n < count; ++n) {
        double seed = z0.s - n * half;
        ZeroLocation zd0 =
            (n == 0) ? z0 : refine_zero_delta0(seed - 0.2 * half, seed + 0.2 * half, p);
        ZeroLocation zd = map_zero_to_delta(zd0);
        ZeroTableRow row;
        row.n = n;
        row.zero_delta = zd;
        row.zero_delta0 = zd0;
        row.x_delta = zd.x;
        row.x_delta0 = zd0.x;
        row.rel_err = rel_err_from_w0(zd0.w);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace lacuna::zeros
