#include "hardylt/green.hpp"
#include "hardylt/numerics.hpp"
#include "hardylt/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace hardylt::green {

namespace {

using specfun::BesselQuadScaled;
using specfun::bessel_quad_scaled;

// G_b(r,s,k) = g_b(min) g_{b+1}(max) / W_b with
//   g_c(r,k) = sqrt(r) (I1(ck) K0(kr) + K1(ck) I0(kr)),
//   W_b(k)   = I1((b+1)k) K1(bk) - I1(bk) K1((b+1)k).
// Every exponential below has a nonpositive argument, so the assembly
// neither overflows nor loses the leading order for large arguments.
double kernel_scaled(double b, double k, double r, double s) {
    const BesselQuadScaled qb = bessel_quad_scaled(b * k);
    const BesselQuadScaled qb1 = bessel_quad_scaled((b + 1.0) * k);
    const BesselQuadScaled qr = bessel_quad_scaled(r * k);
    const BesselQuadScaled qs = bessel_quad_scaled(s * k);

    const double left = qb.i1e * qr.k0e * std::exp(2.0 * k * (b - r)) + qb.k1e * qr.i0e;
    const double right = qb1.i1e * qs.k0e + qb1.k1e * qs.i0e * std::exp(2.0 * k * (s - b - 1.0));
    const double wron = qb1.i1e * qb.k1e - qb.i1e * qb1.k1e * std::exp(-2.0 * k);
    if (!(wron > 0.0))
        throw std::runtime_error("green_kernel: nonpositive Wronskian (internal inconsistency)");

    return std::sqrt(r * s) * std::exp(k * (r - s)) * left * right / wron;
}

double profile_b_zero(double alpha, double k, double x) {
    if (x == 0.0) return 0.0;
    const specfun::BesselQuad qk = specfun::bessel_quad(k);
    const specfun::BesselQuad qx = specfun::bessel_quad(k * x);
    return std::pow(x, 1.0 - alpha) * qx.i0 * (qk.i1 * qx.k0 + qk.k1 * qx.i0) / qk.i1;
}

double profile_b_inf(double alpha, double k, double x) {
    if (alpha > 0.0) return 0.0;
    // cosh(kx) cosh(k(1-x)) / (k sinh k), written overflow-free
    const double num = 1.0 + std::exp(-2.0 * k * x) + std::exp(-2.0 * k * (1.0 - x)) +
                       std::exp(-2.0 * k);
    return num / (2.0 * k * (1.0 - std::exp(-2.0 * k)));
}

} // namespace

double green_kernel(const GreenParams& p, double r, double s) {
    if (!(p.b > 0.0)) throw std::domain_error("green_kernel: b must be positive");
    if (!(p.k > 0.0)) throw std::domain_error("green_kernel: k must be positive");
    if (!(r >= p.b && r <= p.b + 1.0 && s >= p.b && s <= p.b + 1.0))
        throw std::domain_error("green_kernel: arguments outside [b, b+1]");
    if (r > s) std::swap(r, s);
    return kernel_scaled(p.b, p.k, r, s);
}

double diagonal_profile(double alpha, double b, double k, double x) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::domain_error("diagonal_profile: alpha must be in [0,1)");
    if (!(k > 0.0)) throw std::domain_error("diagonal_profile: k must be positive");
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("diagonal_profile: x must be in [0,1]");
    if (b == 0.0) return profile_b_zero(alpha, k, x);
    if (std::isinf(b)) return profile_b_inf(alpha, k, x);
    if (!(b > 0.0)) throw std::domain_error("diagonal_profile: b must be nonnegative");
    return std::pow(b + x, -alpha) * kernel_scaled(b, k, b + x, b + x);
}

DiagonalBound compute_c_alpha(double alpha, double k, double opt_tol) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::domain_error("compute_c_alpha: alpha must be in [0,1)");
    if (!(k > 0.0)) throw std::domain_error("compute_c_alpha: k must be positive");
    if (!(opt_tol > 0.0)) throw std::domain_error("compute_c_alpha: opt_tol must be positive");

    auto interior = [&](double x, double b) { return diagonal_profile(alpha, b, k, x); };
    auto bz = [&](double x) { return profile_b_zero(alpha, k, x); };
    auto binf = [&](double x) { return profile_b_inf(alpha, k, x); };

    // sup of the alpha = 0 profile dominates the tail: g_a(x,b) <= b^-a * M0.
    double m0 = 0.0;
    if (alpha > 0.0) {
        auto i0 = [&](double x, double b) { return diagonal_profile(0.0, b, k, x); };
        auto bz0 = [&](double x) { return profile_b_zero(0.0, k, x); };
        auto binf0 = [&](double x) { return profile_b_inf(0.0, k, x); };
        m0 = numerics::sup_profile(i0, bz0, binf0, 64.0, 100, 100, 1e-8).value * (1.0 + opt_tol);
    }

    double b_max = 16.0;
    numerics::ProfileSup sup{};
    for (int attempt = 0;; ++attempt) {
        if (attempt > 24)
            throw std::runtime_error("compute_c_alpha: b-truncation did not stabilize");
        sup = numerics::sup_profile(interior, bz, binf, b_max, 200, 200, 1e-9);
        if (alpha == 0.0) {
            // g_0(x, b) approaches the b = inf profile; accept once close.
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
        throw std::runtime_error("compute_c_alpha: refinement failed to produce a positive maximum");

    return {alpha, k, sup.value * (1.0 + opt_tol), sup.argmax_x,
            sup.at_b_inf ? HUGE_VAL : sup.argmax_b};
}

} // namespace hardylt::green
