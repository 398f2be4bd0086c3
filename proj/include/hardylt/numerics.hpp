#ifndef HARDYLT_NUMERICS_HPP
#define HARDYLT_NUMERICS_HPP

#include <functional>

namespace hardylt::numerics {

// Adaptive Simpson quadrature with Richardson error control.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth = 48);

struct GoldenResult {
    double x;
    double value;
};

// Golden-section minimization on [lo, hi]; unimodality is the caller's business.
GoldenResult golden_min(const std::function<double(double)>& f, double lo, double hi,
                        double xtol);

GoldenResult golden_max(const std::function<double(double)>& f, double lo, double hi,
                        double xtol);

// Root of the nondecreasing continuous f on [lo, hi] with f(lo) <= target <= f(hi).
double bisect_nondecreasing(const std::function<double(double)>& f, double lo, double hi,
                            double target, double xtol);

// Supremum of a profile g(x, b) over [0,1] x [0,inf], where the b = 0 and
// b = inf boundary values are supplied as separate closed-form profiles.
// Grid scan (nx x nb interior points, b truncated at b_max) followed by
// golden-section refinement per axis. Ties break toward the first grid point
// visited, so results are deterministic.
struct ProfileSup {
    double value;
    double argmax_x;
    double argmax_b; // 0 or +inf when a boundary profile wins
    bool at_b_zero = false;
    bool at_b_inf = false;
};

ProfileSup sup_profile(const std::function<double(double, double)>& interior,
                       const std::function<double(double)>& at_b_zero,
                       const std::function<double(double)>& at_b_inf,
                       double b_max, int nx, int nb, double xtol);

} // namespace hardylt::numerics

#endif
