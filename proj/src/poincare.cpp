#include "hardylt/poincare.hpp"
#include "hardylt/detail/ddouble.hpp"
#include "hardylt/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace hardylt::poincare {

namespace {

using detail::ddouble;

ddouble dd_log_dd(ddouble a) {
    ddouble r = detail::dd_log(a.hi);
    return r + ddouble{a.lo / a.hi};
}

// Phi(b,c) = (4(b+1)^4 log(b+1) - 4 b^4 log b
//             - (2b+1)(3 + 6b + 6b^2 - 4c^2 + 4(2b^2+2b+1) log c)) / (4(2b+1)^2)
double phi_dd(double b, ddouble c) {
    const ddouble bb{b};
    const ddouble b1 = detail::two_sum(b, 1.0);
    const ddouble b1_4 = (b1 * b1) * (b1 * b1);
    const ddouble b_4 = (bb * bb) * (bb * bb);
    const ddouble log_b1 = dd_log_dd(b1);
    const ddouble log_b = b > 0.0 ? detail::dd_log(b) : ddouble{0.0}; // b^4 log b -> 0
    const ddouble log_c = dd_log_dd(c);
    const ddouble two_b1 = detail::two_sum(2.0 * b, 1.0);

    const ddouble poly = ddouble{3.0} + bb * 6.0 + bb * bb * 6.0 - c * c * 4.0 +
                         (bb * bb * 2.0 + bb * 2.0 + 1.0) * log_c * 4.0;
    const ddouble num = b1_4 * log_b1 * 4.0 - b_4 * log_b * 4.0 - two_b1 * poly;
    return (num / (two_b1 * two_b1 * 4.0)).to_double();
}

double profile_b_zero(double alpha, double x) {
    if (x == 0.0) return 0.0;
    return std::pow(x, 1.0 - alpha) * (-std::log(x) + x * x - 0.75);
}

double profile_b_inf(double alpha, double x) {
    if (alpha > 0.0) return 0.0;
    return 1.0 / 3.0 - x + x * x;
}

} // namespace

double phi(const PhiParams& p) {
    if (!(p.b >= 0.0)) throw std::domain_error("phi: b must be nonnegative");
    if (!(p.c >= p.b && p.c <= p.b + 1.0))
        throw std::domain_error("phi: c must lie in [b, b+1]");
    if (p.b == 0.0 && p.c == 0.0) throw std::domain_error("phi: c must be positive");
    return phi_dd(p.b, ddouble{p.c});
}

double phi_profile(double alpha, double x, double b) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::domain_error("phi_profile: alpha must be in [0,1)");
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("phi_profile: x must be in [0,1]");
    if (b == 0.0) return profile_b_zero(alpha, x);
    if (std::isinf(b)) return profile_b_inf(alpha, x);
    if (!(b > 0.0)) throw std::domain_error("phi_profile: b must be nonnegative");
    return std::pow(b + x, 1.0 - alpha) * phi_dd(b, detail::two_sum(b, x));
}

SobolevConstant compute_s_alpha(double alpha, double opt_tol) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::domain_error("compute_s_alpha: alpha must be in [0,1)");
    if (!(opt_tol > 0.0)) throw std::domain_error("compute_s_alpha: opt_tol must be positive");

    auto interior = [&](double x, double b) { return phi_profile(alpha, x, b); };
    auto bz = [&](double x) { return profile_b_zero(alpha, x); };
    auto binf = [&](double x) { return profile_b_inf(alpha, x); };

    double m0 = 0.0;
    if (alpha > 0.0) {
        auto i0 = [&](double x, double b) { return phi_profile(0.0, x, b); };
        auto bz0 = [&](double x) { return profile_b_zero(0.0, x); };
        auto binf0 = [&](double x) { return profile_b_inf(0.0, x); };
        m0 = numerics::sup_profile(i0, bz0, binf0, 64.0, 100, 100, 1e-8).value * (1.0 + opt_tol);
    }

    double b_max = 16.0;
    numerics::ProfileSup sup{};
    for (int attempt = 0;; ++attempt) {
        if (attempt > 24)
            throw std::runtime_error("compute_s_alpha: b-truncation did not stabilize");
        sup = numerics::sup_profile(interior, bz, binf, b_max, 200, 200, 1e-9);
        if (alpha == 0.0) {
            double dev = 0.0;
            for (int i = 0; i <= 50; ++i) {
                const double x = i / 50.0;
                dev = std::max(dev, std::fabs(interior(x, b_max) - binf(x)));
            }
            if (dev < opt_tol * std::max(1.0, sup.value)) break;
        } else {
            if (std::pow(b_max, -alpha) * m0 <= sup.value) break;
        }
        b_max *= 2.0;
    }
    if (!std::isfinite(sup.value) || !(sup.value > 0.0))
        throw std::runtime_error("compute_s_alpha: refinement failed to produce a positive maximum");

    return {alpha, sup.value * (1.0 + opt_tol), sup.argmax_x,
            sup.at_b_inf ? HUGE_VAL : sup.argmax_b};
}

} // namespace hardylt::poincare
