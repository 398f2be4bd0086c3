#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hardylt/green.hpp"
#include "hardylt/specfun.hpp"
#include "hardylt/spectral.hpp"

#include <cmath>
#include <limits>
#include <vector>

using hardylt::green::GreenParams;
using hardylt::green::compute_c_alpha;
using hardylt::green::diagonal_profile;
using hardylt::green::green_kernel;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("kernel is symmetric") {
    for (double b : {0.5, 1.0, 7.0, 120.0}) {
        const GreenParams p{b, 2.3};
        for (double u : {0.1, 0.45, 0.8}) {
            const double r = b + u, s = b + 0.97;
            CHECK(green_kernel(p, r, s) == green_kernel(p, s, r));
        }
    }
}

TEST_CASE("kernel solves the ODE away from the diagonal") {
    // -G'' - G/(4 s^2) + k^2 G = 0 in s for fixed r != s
    for (double b : {0.3, 2.0, 40.0}) {
        for (double k : {0.8, 3.555}) {
            const GreenParams p{b, k};
            const double r = b + 0.25;
            const double h = 1e-4;
            for (double s : {b + 0.6, b + 0.85}) {
                const double gm = green_kernel(p, r, s - h);
                const double g0 = green_kernel(p, r, s);
                const double gp = green_kernel(p, r, s + h);
                const double d2 = (gp - 2.0 * g0 + gm) / (h * h);
                const double resid = -d2 - g0 / (4.0 * s * s) + k * k * g0;
                CHECK(std::fabs(resid) < 1e-5 * std::max(1.0, k * k * g0));
            }
        }
    }
}

TEST_CASE("derivative jump across the diagonal is -1") {
    for (double b : {0.5, 3.0, 25.0}) {
        const GreenParams p{b, 1.7};
        const double r = b + 0.4;
        const double h = 1e-6;
        // one-sided slopes of s -> G(r,s) on each side of s = r
        const double right = (green_kernel(p, r, r + 2 * h) - green_kernel(p, r, r + h)) / h;
        const double left = (green_kernel(p, r, r - h) - green_kernel(p, r, r - 2 * h)) / h;
        CHECK(right - left == doctest::Approx(-1.0).epsilon(1e-4));
    }
}

TEST_CASE("natural boundary condition u'(b) = u(b)/(2b) at both ends") {
    for (double b : {0.7, 5.0}) {
        const GreenParams p{b, 2.1};
        const double r = b + 0.5;
        const double h = 1e-6;
        const double ul = green_kernel(p, r, b);
        const double dl = (green_kernel(p, r, b + h) - ul) / h;
        CHECK(dl == doctest::Approx(ul / (2.0 * b)).epsilon(1e-4));
        const double ur = green_kernel(p, r, b + 1.0);
        const double dr = (ur - green_kernel(p, r, b + 1.0 - h)) / h;
        CHECK(dr == doctest::Approx(ur / (2.0 * (b + 1.0))).epsilon(1e-4));
    }
}

TEST_CASE("kernel matches the discretized resolvent applied to a delta") {
    // solve (A + k^2 B) w = F with F the load of a point source at s in the
    // substituted variable; then G(s,s) ~ sqrt(s) * w(s)
    const double b = 1.0, k = 1.0, s = 1.5;
    const auto p = hardylt::spectral::assemble_interval(
        hardylt::Potential::piecewise({{b, b + 1.0, 0.0}}), b, {});
    const auto a = p.assemble(4000);
    const int m = a.dim();
    std::vector<double> diag(m), off(m - 1), rhs(m, 0.0);
    for (int i = 0; i < m; ++i) diag[i] = a.a_diag[i] + k * k * a.b_diag[i];
    for (int i = 0; i + 1 < m; ++i) off[i] = a.a_off[i] + k * k * a.b_off[i];
    int j = 0;
    while (j + 2 < m && a.nodes[j + 1] <= s) ++j;
    const double h = a.nodes[j + 1] - a.nodes[j];
    const double t = (s - a.nodes[j]) / h;
    rhs[j] = std::sqrt(s) * (1.0 - t);
    rhs[j + 1] = std::sqrt(s) * t;
    // Thomas elimination (the shifted pencil is positive definite)
    for (int i = 1; i < m; ++i) {
        const double f = off[i - 1] / diag[i - 1];
        diag[i] -= f * off[i - 1];
        rhs[i] -= f * rhs[i - 1];
    }
    std::vector<double> w(m);
    w[m - 1] = rhs[m - 1] / diag[m - 1];
    for (int i = m - 2; i >= 0; --i) w[i] = (rhs[i] - off[i] * w[i + 1]) / diag[i];
    const double g_fem = std::sqrt(s) * ((1.0 - t) * w[j] + t * w[j + 1]);
    CHECK(g_fem == doctest::Approx(green_kernel({b, k}, s, s)).epsilon(1e-5));
}

TEST_CASE("sup tracks the conjectured right-endpoint value (recorded only)") {
    for (double k : {1.0, 2.0, 3.555, 5.0}) {
        const auto r = compute_c_alpha(0.0, k, 1e-5);
        const auto q = hardylt::specfun::bessel_quad(k);
        const double conj = q.i0 / (k * q.i1);
        MESSAGE("k = " << k << ": c_0(k) = " << r.c_alpha_k << ", I0/(k I1) = " << conj
                       << ", relative gap = " << (r.c_alpha_k - conj) / conj);
        CHECK(r.c_alpha_k > 0.0);
    }
}

TEST_CASE("diagonal profile matches its closed-form boundary limits") {
    const double k = 3.555;
    for (double x : {0.05, 0.3, 0.62, 0.95}) {
        CHECK(diagonal_profile(0.0, 1e-9, k, x) ==
              doctest::Approx(diagonal_profile(0.0, 0.0, k, x)).epsilon(1e-6));
        CHECK(diagonal_profile(0.0, 1e7, k, x) ==
              doctest::Approx(diagonal_profile(0.0, kInf, k, x)).epsilon(1e-6));
        CHECK(diagonal_profile(0.5, 1e-6, k, x) ==
              doctest::Approx(diagonal_profile(0.5, 0.0, k, x)).epsilon(1e-3));
    }
}

TEST_CASE("b = 0 profile anchor at the paper's k") {
    // frozen extended-precision value of g0(1, 0) at k = 3.555
    CHECK(diagonal_profile(0.0, 0.0, 3.555, 1.0) ==
          doctest::Approx(0.3333160426892683).epsilon(1e-12));
    // and its closed form I0(k)/(k I1(k)) at x = 1... the cosh limit at b = inf
    const auto q = hardylt::specfun::bessel_quad(3.555);
    CHECK(diagonal_profile(0.0, 0.0, 3.555, 1.0) ==
          doctest::Approx(q.i0 * (q.i1 * q.k0 + q.k1 * q.i0) / q.i1).epsilon(1e-12));
}

TEST_CASE("diagonal decreases in k") {
    for (double b : {0.0, 1.0, 10.0, kInf}) {
        double prev = diagonal_profile(0.0, b, 0.7, 0.5);
        for (double k : {1.2, 2.0, 3.6, 7.0}) {
            const double cur = diagonal_profile(0.0, b, k, 0.5);
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("sup of g0 at k = 3.555 sits at (1, 0) just under 1/3") {
    const auto r = compute_c_alpha(0.0, 3.555);
    CHECK(r.c_alpha_k == doctest::Approx(0.333316).epsilon(2e-5));
    CHECK(r.c_alpha_k < 1.0 / 3.0);
    CHECK(r.argmax_x == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(r.argmax_b == 0.0);
}

TEST_CASE("sup bounds every sampled profile value") {
    for (double alpha : {0.0, 0.25, 0.5}) {
        const double k = 2.8;
        const auto r = compute_c_alpha(alpha, k, 1e-5);
        for (double b : {0.0, 0.1, 1.0, 17.0, 400.0, kInf})
            for (int i = 0; i <= 40; ++i)
                CHECK(diagonal_profile(alpha, b, k, i / 40.0) <= r.c_alpha_k * (1.0 + 1e-12));
    }
}
