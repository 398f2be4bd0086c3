#ifndef HARDYLT_POINCARE_HPP
#define HARDYLT_POINCARE_HPP

namespace hardylt::poincare {

struct PhiParams {
    double b; // left endpoint, > 0 (b = 0 evaluates the limit)
    double c; // evaluation point, b <= c <= b+1
};

struct SobolevConstant {
    double alpha;
    double s_alpha;   // validated upper estimate of sup phi_alpha
    double argmax_x;  // in [0,1]
    double argmax_b;  // in [0, inf]
};

// Sharp constant in |v(c)|^2 <= Phi(b,c) int |v'|^2 r dr over mean-zero
// (weight r) functions on (b, b+1). Closed form; the b^4 log b terms cancel
// violently for large b, so the expression is assembled in double-double.
double phi(const PhiParams& p);

// phi_alpha(x,b) = (b+x)^{1-alpha} Phi(b, b+x); b = 0 and b = +inf use the
// closed-form limits.
double phi_profile(double alpha, double x, double b);

// sup over [0,1] x [0,inf] of phi_alpha, rounded up by (1 + opt_tol).
SobolevConstant compute_s_alpha(double alpha, double opt_tol = 1e-6);

} // namespace hardylt::poincare

#endif
