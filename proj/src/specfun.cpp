#include "hardylt/specfun.hpp"
#include "hardylt/detail/ddouble.hpp"

#include <cmath>
#include <stdexcept>

namespace hardylt::specfun {

using detail::ddouble;

namespace {

constexpr double kSeriesAsymptoticCrossover = 19.0;
// At the crossover the series needs double-double accumulation (the K series
// cancels like e^{2x}) and the asymptotic expansion reaches ~e^{-2x} at
// optimal truncation; both sides meet below 1e-15 relative at x = 19.

struct SeriesResult {
    double i0, i1, k0, k1;
};

// Ascending series, DLMF 10.25.2 / 10.31.2, accumulated in double-double.
SeriesResult bessel_small(double x) {
    const ddouble q = detail::two_prod(x, x) * 0.25;
    const ddouble lg = detail::dd_log(0.5 * x) + detail::dd_euler_gamma;

    ddouble i0{1.0}, i1{1.0};
    ddouble k0_sum{0.0}, k1_sum{1.0}; // k1_sum carries (H_k + H_{k+1}) weights
    ddouble t{1.0};                   // q^k / (k!)^2
    ddouble s{1.0};                   // q^k / (k! (k+1)!)
    ddouble h{0.0};                   // H_k
    ddouble h1{1.0};                  // H_{k+1}

    for (int k = 1; k < 500; ++k) {
        const double kd = static_cast<double>(k);
        t = t * q / ddouble{kd * kd};
        s = s * q / ddouble{kd * (kd + 1.0)};
        h = h + ddouble{1.0} / ddouble{kd};
        h1 = h1 + ddouble{1.0} / ddouble{kd + 1.0};
        i0 = i0 + t;
        i1 = i1 + s;
        k0_sum = k0_sum + t * h;
        k1_sum = k1_sum + s * (h + h1);
        if (std::fabs(t.hi) < 1e-34 * std::fabs(i0.hi) &&
            std::fabs(s.hi) < 1e-34 * std::fabs(i1.hi))
            break;
    }

    const ddouble i1_full = i1 * (0.5 * x);
    const ddouble k0 = k0_sum - lg * i0;
    const ddouble k1 = ddouble{1.0} / ddouble{x} + lg * i1_full - (k1_sum * (0.25 * x));

    return {i0.to_double(), i1_full.to_double(), k0.to_double(), k1.to_double()};
}

// One asymptotic series Sum c_k with c_{k+1} = sgn * c_k (mu-(2k+1)^2)/(8x(k+1));
// sgn = +1 for K, -1 for I (DLMF 10.40.1-2). Stops at the smallest term.
double asymptotic_sum(double mu, double x, double sgn) {
    double sum = 1.0, term = 1.0;
    for (int k = 0; k < 200; ++k) {
        const double num = mu - (2.0 * k + 1.0) * (2.0 * k + 1.0);
        const double next = sgn * term * num / (8.0 * x * (k + 1.0));
        if (std::fabs(next) >= std::fabs(term)) break; // divergent tail
        term = next;
        sum += term;
        if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
    }
    return sum;
}

} // namespace

BesselQuadScaled bessel_quad_scaled(double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel_quad: argument must be positive");

    if (x < kSeriesAsymptoticCrossover) {
        const SeriesResult r = bessel_small(x);
        const double em = std::exp(-x), ep = std::exp(x);
        return {x, r.i0 * em, r.i1 * em, r.k0 * ep, r.k1 * ep};
    }

    const double pref_k = std::sqrt(M_PI / (2.0 * x));
    const double pref_i = 1.0 / std::sqrt(2.0 * M_PI * x);
    return {x,
            pref_i * asymptotic_sum(0.0, x, -1.0),
            pref_i * asymptotic_sum(4.0, x, -1.0),
            pref_k * asymptotic_sum(0.0, x, +1.0),
            pref_k * asymptotic_sum(4.0, x, +1.0)};
}

BesselQuad bessel_quad(double x, double tol) {
    if (!(x > 0.0)) throw std::domain_error("bessel_quad: argument must be positive");
    if (!(tol > 0.0 && tol <= 1.0))
        throw std::domain_error("bessel_quad: tolerance must be in (0,1]");

    if (x < kSeriesAsymptoticCrossover) {
        const SeriesResult r = bessel_small(x);
        return {x, r.i0, r.i1, r.k0, r.k1, false};
    }

    const BesselQuadScaled s = bessel_quad_scaled(x);
    const double em = std::exp(-x), ep = std::exp(x);
    BesselQuad r{x, s.i0e * ep, s.i1e * ep, s.k0e * em, s.k1e * em, false};
    if (r.k0 == 0.0 || r.k1 == 0.0) {
        r.k0 = 0.0;
        r.k1 = 0.0;
        r.k_underflow = true;
    }
    return r;
}

double euler_beta(double p, double q) {
    if (!(p > 0.0) || !(q > 0.0))
        throw std::domain_error("euler_beta: arguments must be positive");
    return std::exp(std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q));
}

} // namespace hardylt::specfun
