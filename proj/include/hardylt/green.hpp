#ifndef HARDYLT_GREEN_HPP
#define HARDYLT_GREEN_HPP

namespace hardylt::green {

// Interval operator parameters: the interval is (b, b+1), the energy -k^2.
struct GreenParams {
    double b;
    double k;
};

struct DiagonalBound {
    double alpha;
    double k;
    double c_alpha_k;  // validated upper estimate of sup g_alpha
    double argmax_x;   // in [0,1]
    double argmax_b;   // in [0, inf]; +inf when the limit profile wins
};

// Resolvent kernel G_b(r,s,k) of the interval operator, r,s in [b,b+1].
// Assembled from exponentially scaled Bessel values, so large b*k is safe.
double green_kernel(const GreenParams& p, double r, double s);

// g_alpha(x,b) = (b+x)^{-alpha} G_b(b+x, b+x, k). Pass b = 0 or b = +inf
// for the closed-form boundary limits.
double diagonal_profile(double alpha, double b, double k, double x);

// sup over [0,1] x [0,inf] of g_alpha, rounded up by (1 + opt_tol).
DiagonalBound compute_c_alpha(double alpha, double k, double opt_tol = 1e-6);

} // namespace hardylt::green

#endif
