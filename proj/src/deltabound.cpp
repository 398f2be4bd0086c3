#include "hardylt/deltabound.hpp"
#include "hardylt/numerics.hpp"
#include "hardylt/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace hardylt::deltabound {

namespace {

double i0k0(double R) {
    const specfun::BesselQuadScaled q = specfun::bessel_quad_scaled(R);
    return q.i0e * q.k0e; // scale factors cancel
}

} // namespace

double DeltaResult::lower_bound(double alpha) const {
    return std::pow(R, 1.0 - alpha) * i0k0;
}

DeltaResult beta_of_R(double R) {
    if (!(R > 0.0)) throw std::domain_error("beta_of_R: R must be positive");
    const double p = i0k0(R);
    return {R, 1.0 / (R * p), p};
}

double delta_eigenfunction(double R, double r) {
    if (!(R > 0.0 && r > 0.0)) throw std::domain_error("delta_eigenfunction: domain error");
    const specfun::BesselQuadScaled qR = specfun::bessel_quad_scaled(R);
    const specfun::BesselQuadScaled qr = specfun::bessel_quad_scaled(r);
    if (r < R) return std::sqrt(r) * qr.i0e * qR.k0e * std::exp(r - R);
    return std::sqrt(r) * qr.k0e * qR.i0e * std::exp(R - r);
}

DeltaResult minimize_beta(double search_tol) {
    const double lo = 0.1, hi = 20.0;
    const int n = 400;
    std::vector<double> beta(n + 1);
    for (int i = 0; i <= n; ++i) beta[i] = beta_of_R(lo + (hi - lo) * i / n).beta;
    int imin = 0;
    for (int i = 1; i <= n; ++i)
        if (beta[i] < beta[imin]) imin = i;
    // unimodality screen: strictly descending before the minimum, ascending after
    for (int i = 1; i <= n; ++i) {
        const bool ok = i <= imin ? beta[i] <= beta[i - 1] * (1.0 + 1e-12)
                                  : beta[i] >= beta[i - 1] * (1.0 - 1e-12);
        if (!ok)
            throw std::runtime_error("minimize_beta: beta(R) not unimodal on screen grid near R=" +
                                     std::to_string(lo + (hi - lo) * i / n));
    }
    const double bl = lo + (hi - lo) * std::max(0, imin - 1) / n;
    const double bh = lo + (hi - lo) * std::min(n, imin + 1) / n;
    numerics::GoldenResult g =
        numerics::golden_min([](double R) { return beta_of_R(R).beta; }, bl, bh, search_tol);
    return beta_of_R(g.x);
}

LowerBound lower_bound_alpha(double alpha, double search_tol) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::domain_error("lower_bound_alpha: alpha must be in [0,1)");
    auto f = [&](double R) { return std::pow(R, 1.0 - alpha) * i0k0(R); };
    const double lo = 1e-3, hi = 200.0;
    const int n = 2000;
    int imax = 0;
    double vmax = -1.0;
    for (int i = 0; i <= n; ++i) {
        // log-spaced scan; the profile is smooth and -> 0 at both ends for alpha > 0
        const double R = lo * std::pow(hi / lo, static_cast<double>(i) / n);
        const double v = f(R);
        if (v > vmax) {
            vmax = v;
            imax = i;
        }
    }
    const double Rl = lo * std::pow(hi / lo, static_cast<double>(std::max(0, imax - 1)) / n);
    const double Rh = lo * std::pow(hi / lo, static_cast<double>(std::min(n, imax + 1)) / n);
    numerics::GoldenResult g = numerics::golden_max(f, Rl, Rh, search_tol);
    // an interior maximum on the scan means the sup is attained at finite R
    const bool attained = imax > 0 && imax < n;
    return {g.value, g.x, attained};
}

} // namespace hardylt::deltabound
