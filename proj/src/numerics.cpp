#include "hardylt/numerics.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace hardylt::numerics {

namespace {

double simpson(double fa, double fm, double fb, double h) {
    return (fa + 4.0 * fm + fb) * h / 6.0;
}

double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                            double fa, double fm, double fb, double whole, double tol,
                            int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double err = left + right - whole;
    if (depth <= 0 || std::fabs(err) <= 15.0 * tol)
        return left + right + err / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

constexpr double kGolden = 0.6180339887498949; // (sqrt(5)-1)/2

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth) {
    if (a == b) return 0.0;
    const double sign = a < b ? 1.0 : -1.0;
    if (a > b) std::swap(a, b);
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = simpson(fa, fm, fb, b - a);
    return sign * adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

GoldenResult golden_min(const std::function<double(double)>& f, double lo, double hi,
                        double xtol) {
    if (!(lo < hi)) throw std::invalid_argument("golden_min: empty bracket");
    double x1 = hi - kGolden * (hi - lo);
    double x2 = lo + kGolden * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    while (hi - lo > xtol) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kGolden * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kGolden * (hi - lo);
            f2 = f(x2);
        }
    }
    const double xm = 0.5 * (lo + hi);
    return {xm, f(xm)};
}

GoldenResult golden_max(const std::function<double(double)>& f, double lo, double hi,
                        double xtol) {
    GoldenResult r = golden_min([&](double x) { return -f(x); }, lo, hi, xtol);
    r.value = -r.value;
    return r;
}

double bisect_nondecreasing(const std::function<double(double)>& f, double lo, double hi,
                            double target, double xtol) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo > target || fhi < target)
        throw std::invalid_argument("bisect_nondecreasing: target not bracketed");
    while (hi - lo > xtol) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

ProfileSup sup_profile(const std::function<double(double, double)>& interior,
                       const std::function<double(double)>& at_b_zero,
                       const std::function<double(double)>& at_b_inf,
                       double b_max, int nx, int nb, double xtol) {
    if (nx < 2 || nb < 2) throw std::invalid_argument("sup_profile: grid too coarse");

    ProfileSup best{-HUGE_VAL, 0.0, 0.0, false, false};
    auto consider = [&](double v, double x, double b, bool bz, bool bi) {
        if (v > best.value) best = {v, x, b, bz, bi};
    };

    // Boundary profiles first so ties resolve toward the closed forms.
    for (int i = 0; i <= nx; ++i) {
        const double x = static_cast<double>(i) / nx;
        consider(at_b_zero(x), x, 0.0, true, false);
        consider(at_b_inf(x), x, HUGE_VAL, false, true);
    }
    // Interior grid, b concentrated near the origin (cubic stretching).
    std::vector<double> bs(nb);
    for (int j = 0; j < nb; ++j) {
        const double u = static_cast<double>(j + 1) / (nb + 1);
        bs[j] = b_max * u * u * u;
    }
    for (int j = 0; j < nb; ++j)
        for (int i = 0; i <= nx; ++i) {
            const double x = static_cast<double>(i) / nx;
            consider(interior(x, bs[j]), x, bs[j], false, false);
        }

    // Golden refinement, coordinate-wise.
    const double hx = 1.0 / nx;
    if (best.at_b_zero || best.at_b_inf) {
        const auto& prof = best.at_b_zero ? at_b_zero : at_b_inf;
        const double lo = std::max(0.0, best.argmax_x - hx);
        const double hi = std::min(1.0, best.argmax_x + hx);
        GoldenResult g = golden_max(prof, lo, hi, xtol);
        if (g.value > best.value) {
            best.value = g.value;
            best.argmax_x = g.x;
        }
        return best;
    }

    double x = best.argmax_x, b = best.argmax_b, v = best.value;
    for (int round = 0; round < 4; ++round) {
        GoldenResult gx = golden_max([&](double t) { return interior(t, b); },
                                     std::max(0.0, x - hx), std::min(1.0, x + hx), xtol);
        if (gx.value > v) {
            v = gx.value;
            x = gx.x;
        }
        GoldenResult gb = golden_max([&](double t) { return interior(x, t); },
                                     std::max(1e-12, 0.3 * b), std::min(b_max, 3.0 * b),
                                     xtol * std::max(1.0, b));
        if (gb.value > v) {
            v = gb.value;
            b = gb.x;
        }
    }
    best.value = v;
    best.argmax_x = x;
    best.argmax_b = b;
    return best;
}

} // namespace hardylt::numerics
