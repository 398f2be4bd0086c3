#ifndef HARDYLT_SPECFUN_HPP
#define HARDYLT_SPECFUN_HPP

namespace hardylt::specfun {

// Modified Bessel values I0, I1, K0, K1 at a common argument.
struct BesselQuad {
    double x;
    double i0, i1, k0, k1;
    // true when K0/K1 underflow to zero at large x; i0/i1 overflow to +inf
    // in the same regime, so use the scaled variant there
    bool k_underflow = false;
};

// Exponentially scaled variant: i0e = I0(x) e^{-x}, k0e = K0(x) e^{x}, etc.
// Free of overflow/underflow for any representable x > 0.
struct BesselQuadScaled {
    double x;
    double i0e, i1e, k0e, k1e;
};

// Evaluates I0, I1, K0, K1 at x > 0. Power series with double-double
// accumulation below the crossover, asymptotic expansions above it.
// Relative error <= tol for tol >= 1e-14; the achievable floor is set by
// the expansions themselves (~5e-15 near the crossover).
BesselQuad bessel_quad(double x, double tol = 1e-12);

BesselQuadScaled bessel_quad_scaled(double x);

// Euler beta function B(p,q) = Gamma(p)Gamma(q)/Gamma(p+q), p,q > 0.
double euler_beta(double p, double q);

} // namespace hardylt::specfun

#endif
