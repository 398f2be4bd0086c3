#include "hardylt/partition.hpp"
#include "hardylt/green.hpp"
#include "hardylt/numerics.hpp"
#include "hardylt/poincare.hpp"
#include "hardylt/specfun.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace hardylt::partition {

namespace {

struct AlphaConstants {
    double k;
    double s_alpha;
    double c_alpha_k;
};

std::mutex g_cache_mutex;
std::map<double, AlphaConstants> g_cache; // keyed by alpha (exact double)

// Coarse probe of sup g_alpha used only inside the k-optimization loop.
double c_alpha_probe(double alpha, double k) {
    auto interior = [&](double x, double b) { return green::diagonal_profile(alpha, b, k, x); };
    auto bz = [&](double x) { return green::diagonal_profile(alpha, 0.0, k, x); };
    auto binf = [&](double x) { return green::diagonal_profile(alpha, HUGE_VAL, k, x); };
    return numerics::sup_profile(interior, bz, binf, 64.0, 80, 80, 1e-7).value;
}

AlphaConstants constants_for(double alpha) {
    {
        std::lock_guard lock(g_cache_mutex);
        auto it = g_cache.find(alpha);
        if (it != g_cache.end()) return it->second;
    }
    AlphaConstants out{};
    out.s_alpha = poincare::compute_s_alpha(alpha).s_alpha;
    if (alpha == 0.0) {
        out.k = 3.555;
    } else {
        const double s = out.s_alpha;
        auto objective = [&](double logk) {
            const double k = std::exp(logk);
            return std::pow(k, 1.0 - alpha) * std::max(s, c_alpha_probe(alpha, k));
        };
        numerics::GoldenResult g =
            numerics::golden_min(objective, std::log(0.5), std::log(50.0), 1e-3);
        out.k = std::exp(g.x);
    }
    out.c_alpha_k = green::compute_c_alpha(alpha, out.k).c_alpha_k;
    std::lock_guard lock(g_cache_mutex);
    g_cache[alpha] = out;
    return out;
}

} // namespace

double default_k(double alpha) { return constants_for(alpha).k; }

PartitionResult build_partition(const Potential& v, double alpha, double k, double psi_k,
                                double quad_tol) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::domain_error("build_partition: alpha must be in [0,1)");
    if (!(psi_k > 0.0)) throw std::domain_error("build_partition: psi_k must be positive");
    if (!v.known_nonnegative())
        throw std::invalid_argument("build_partition: potential must be nonnegative");

    const double total_mass = v.integral(v.support_lo(), v.support_hi(), alpha, 1.0, false, quad_tol);
    if (!(total_mass > 0.0))
        throw std::invalid_argument("build_partition: potential vanishes identically");

    PartitionResult out;
    out.alpha = alpha;
    out.k = k;
    out.psi_k = psi_k;
    const double target = 1.0 / psi_k;
    const double supp_hi = v.support_hi();

    double a_j = v.support_lo();
    out.breakpoints.push_back(a_j);
    while (a_j < supp_hi) {
        auto f = [&](double a) {
            return std::pow(a - a_j, 1.0 - alpha) *
                   v.integral(a_j, a, alpha, 1.0, false, quad_tol);
        };
        double hi = a_j + 1.0;
        while (f(hi) < target) hi = a_j + 2.0 * (hi - a_j);
        const double a_next = numerics::bisect_nondecreasing(
            f, a_j, hi, target, 1e-13 * std::max(1.0, hi));
        out.interval_integrals.push_back(
            v.integral(a_j, a_next, alpha, 1.0, false, quad_tol));
        out.breakpoints.push_back(a_next);
        a_j = a_next;
    }
    out.trivial = out.breakpoints.size() == 2;
    return out;
}

double aizenman_lieb_lift(double gamma_target, double gamma_base, double alpha,
                          double base_constant) {
    if (gamma_target == gamma_base) return base_constant;
    if (!(gamma_target > gamma_base))
        throw std::domain_error("aizenman_lieb_lift: gamma_target must exceed gamma_base");
    const double shift = 0.5 * (1.0 + alpha);
    const double b_low = specfun::euler_beta(gamma_target - gamma_base, gamma_base + 1.0);
    const double b_high =
        specfun::euler_beta(gamma_target - gamma_base, gamma_base + shift + 1.0);
    return base_constant * b_high / b_low;
}

BoundCertificate certify(const Potential& v, double gamma, double alpha,
                         std::optional<double> k_opt, double tol) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::domain_error("certify: alpha must be in [0,1) (violated: 0 <= alpha < 1)");
    const double gamma_c = 0.5 * (1.0 - alpha);
    if (!(gamma >= gamma_c - 1e-15))
        throw std::domain_error("certify: violated condition gamma >= (1-alpha)/2");
    if (!(gamma + 0.5 * (1.0 + alpha) >= 1.0 - 1e-15))
        throw std::domain_error("certify: violated condition gamma + (1+alpha)/2 >= 1");

    BoundCertificate cert;
    cert.gamma = gamma;
    cert.alpha = alpha;
    cert.used_positive_part = !v.known_nonnegative();
    const Potential vp = v.positive_part();

    const AlphaConstants ac = constants_for(alpha);
    cert.k = k_opt.value_or(ac.k);
    cert.s_alpha = ac.s_alpha;
    cert.c_alpha_k = k_opt && *k_opt != ac.k
                         ? green::compute_c_alpha(alpha, cert.k).c_alpha_k
                         : ac.c_alpha_k;
    cert.psi_k = std::max(cert.s_alpha, cert.c_alpha_k);

    const double base_constant = std::pow(cert.k, 1.0 - alpha) * cert.psi_k;
    const double mass = vp.integral(vp.support_lo(), vp.support_hi(), alpha, 1.0, true, tol);

    if (mass > 0.0) {
        cert.partition = build_partition(vp, alpha, cert.k, cert.psi_k, tol);
        for (double ij : cert.partition.interval_integrals)
            cert.per_interval_bounds.push_back(base_constant * ij);
    } else {
        cert.partition.alpha = alpha;
        cert.partition.k = cert.k;
        cert.partition.psi_k = cert.psi_k;
    }

    const bool critical = std::fabs(gamma - gamma_c) <= 1e-12;
    if (critical) {
        cert.constant_used = base_constant;
        cert.weighted_integral = mass;
    } else {
        cert.constant_used = aizenman_lieb_lift(gamma, gamma_c, alpha, base_constant);
        cert.weighted_integral = vp.integral(vp.support_lo(), vp.support_hi(), alpha,
                                             gamma + 0.5 * (1.0 + alpha), true, tol);
    }
    cert.total = cert.constant_used * cert.weighted_integral;
    return cert;
}

} // namespace hardylt::partition
