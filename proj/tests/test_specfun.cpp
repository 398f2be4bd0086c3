#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hardylt/specfun.hpp"
#include "oracles/bessel_oracle.hpp"

#include <cmath>

using hardylt::specfun::bessel_quad;
using hardylt::specfun::bessel_quad_scaled;
using hardylt::specfun::euler_beta;

namespace {

double rel(double got, long double want) {
    return std::fabs((static_cast<long double>(got) - want) / want);
}

} // namespace

TEST_CASE("bessel quad matches the quadrature oracle across the crossover") {
    for (double x : {1e-4, 0.01, 0.3, 1.0, 2.5, 5.0, 8.0, 12.0, 16.0, 18.9, 19.1,
                     22.0, 30.0, 50.0}) {
        const auto q = bessel_quad(x);
        CAPTURE(x);
        CHECK(rel(q.i0, oracles::bessel_i(0, x)) < 5e-14);
        CHECK(rel(q.i1, oracles::bessel_i(1, x)) < 5e-14);
        CHECK(rel(q.k0, oracles::bessel_k(0, x)) < 5e-14);
        CHECK(rel(q.k1, oracles::bessel_k(1, x)) < 5e-14);
    }
}

TEST_CASE("frozen high-precision anchors") {
    struct Row {
        double x, i0, i1, k0, k1;
    };
    const Row rows[] = {
        {0.5, 1.0634833707413235, 0.25789430539089632, 0.92441907122766586, 1.6564411200033009},
        {1.0, 1.2660658777520083, 0.56515910399248503, 0.42102443824070833, 0.60190723019723457},
        {2.5, 3.289839144050123, 2.5167162452886984, 0.062347553200366186, 0.073890816347747064},
        {10.0, 2815.7166284662545, 2670.9883037012547, 1.7780062316167652e-5,
         1.8648773453825585e-5},
        {19.5, 26760525.339838766, 26065069.264457166, 9.5848240093128287e-10,
         9.8275877543638106e-10},
        {30.0, 781672297823.97749, 768532038938.957, 2.1324774964630564e-14,
         2.1677320018915494e-14},
        {50.0, 2.9325537838493363e20, 2.9030785901035568e20, 3.4101677497894955e-23,
         3.4441022267175556e-23},
    };
    for (const Row& r : rows) {
        const auto q = bessel_quad(r.x);
        CAPTURE(r.x);
        CHECK(q.i0 == doctest::Approx(r.i0).epsilon(2e-14));
        CHECK(q.i1 == doctest::Approx(r.i1).epsilon(2e-14));
        CHECK(q.k0 == doctest::Approx(r.k0).epsilon(2e-14));
        CHECK(q.k1 == doctest::Approx(r.k1).epsilon(2e-14));
    }
}

TEST_CASE("wronskian identity to 1e-11 on a log grid") {
    double worst = 0.0;
    for (int i = 0; i <= 500; ++i) {
        const double x = 1e-6 * std::pow(50.0 / 1e-6, i / 500.0);
        const auto q = bessel_quad(x);
        worst = std::max(worst, std::fabs(x * (q.i1 * q.k0 + q.i0 * q.k1) - 1.0));
    }
    CHECK(worst <= 1e-11);
}

TEST_CASE("scaled variant is consistent with the plain one") {
    for (double x : {0.2, 1.0, 5.0, 15.0, 25.0}) {
        const auto q = bessel_quad(x);
        const auto s = bessel_quad_scaled(x);
        CHECK(s.i0e == doctest::Approx(q.i0 * std::exp(-x)).epsilon(1e-12));
        CHECK(s.i1e == doctest::Approx(q.i1 * std::exp(-x)).epsilon(1e-12));
        CHECK(s.k0e == doctest::Approx(q.k0 * std::exp(x)).epsilon(1e-12));
        CHECK(s.k1e == doctest::Approx(q.k1 * std::exp(x)).epsilon(1e-12));
    }
}

TEST_CASE("scaled wronskian holds far beyond the plain-double range") {
    for (double x : {100.0, 500.0, 5e3, 5e5}) {
        const auto s = bessel_quad_scaled(x);
        CHECK(std::fabs(x * (s.i1e * s.k0e + s.i0e * s.k1e) - 1.0) < 1e-11);
    }
}

TEST_CASE("K underflow is flagged; the scaled variant stays finite") {
    const auto q = bessel_quad(800.0);
    CHECK(q.k_underflow);
    CHECK(q.k0 == 0.0);
    const auto s = bessel_quad_scaled(800.0);
    CHECK(std::isfinite(s.i0e));
    CHECK(std::isfinite(s.k0e));
    CHECK(s.k0e > 0.0);
}

TEST_CASE("monotonicity and order relations") {
    double prev_i0 = 1.0, prev_k0 = INFINITY;
    for (double x = 0.1; x < 40.0; x += 0.37) {
        const auto q = bessel_quad(x);
        CHECK(q.i0 > prev_i0); // I0 strictly increasing
        CHECK(q.k0 < prev_k0); // K0 strictly decreasing
        CHECK(q.i0 > q.i1);    // order relations at equal argument
        CHECK(q.k1 > q.k0);
        prev_i0 = q.i0;
        prev_k0 = q.k0;
    }
}

TEST_CASE("I0' = I1 by central differences") {
    for (double x : {0.5, 2.0, 9.0, 21.0}) {
        const double h = 1e-5 * std::max(1.0, x);
        const double d = (bessel_quad(x + h).i0 - bessel_quad(x - h).i0) / (2.0 * h);
        CHECK(d == doctest::Approx(bessel_quad(x).i1).epsilon(1e-7));
    }
}

TEST_CASE("euler beta: symmetry, anchors, quadrature oracle") {
    CHECK(euler_beta(3.0, 4.0) == doctest::Approx(1.0 / 60.0).epsilon(1e-13));
    CHECK(euler_beta(0.7, 1.9) == doctest::Approx(0.87325393169017925).epsilon(1e-13));
    CHECK(euler_beta(0.33, 2.6) == doctest::Approx(euler_beta(2.6, 0.33)).epsilon(1e-14));
    // B(p,q) = int_0^1 t^{p-1}(1-t)^{q-1} dt via the oracle Simpson rule after
    // the substitution t = sin^2 u removing the endpoint singularities
    const double p = 1.5, q = 2.25;
    auto f = [&](long double u) {
        const long double s = std::fabs(std::sin(u)), c = std::fabs(std::cos(u));
        return 2.0L * std::pow(s, 2.0L * p - 1.0L) * std::pow(c, 2.0L * q - 1.0L);
    };
    const long double pi = 3.14159265358979323846264338327950288L;
    const long double ref = oracles::simpson(f, 0.0L, pi / 2, 8192);
    CHECK(euler_beta(p, q) == doctest::Approx(static_cast<double>(ref)).epsilon(1e-11));
}
