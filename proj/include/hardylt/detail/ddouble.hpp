#ifndef HARDYLT_DETAIL_DDOUBLE_HPP
#define HARDYLT_DETAIL_DDOUBLE_HPP

#include <cmath>

namespace hardylt::detail {

// Unevaluated double-double number hi + lo with |lo| <= ulp(hi)/2.
// Only the operations needed by the Bessel series are provided.
struct ddouble {
    double hi = 0.0;
    double lo = 0.0;

    constexpr ddouble() = default;
    constexpr ddouble(double h) : hi(h), lo(0.0) {}
    constexpr ddouble(double h, double l) : hi(h), lo(l) {}

    double to_double() const { return hi + lo; }
};

inline ddouble two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline ddouble quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline ddouble two_prod(double a, double b) {
    double p = a * b;
    double e = std::fma(a, b, -p);
    return {p, e};
}

inline ddouble operator+(ddouble a, ddouble b) {
    ddouble s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline ddouble operator-(ddouble a, ddouble b) {
    return a + ddouble{-b.hi, -b.lo};
}

inline ddouble operator*(ddouble a, ddouble b) {
    ddouble p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline ddouble operator/(ddouble a, ddouble b) {
    double q1 = a.hi / b.hi;
    ddouble r = a - ddouble{q1} * b;
    double q2 = r.hi / b.hi;
    r = r - ddouble{q2} * b;
    double q3 = r.hi / b.hi;
    ddouble q = quick_two_sum(q1, q2);
    return q + ddouble{q3};
}

inline ddouble operator*(ddouble a, double b) { return a * ddouble{b}; }
inline ddouble operator+(ddouble a, double b) { return a + ddouble{b}; }
inline ddouble operator-(ddouble a, double b) { return a - ddouble{b}; }

inline constexpr ddouble dd_euler_gamma{0.5772156649015329, -4.942915152430645e-18};
inline constexpr ddouble dd_ln2{0.6931471805599453, 2.3190468138462996e-17};

// log(x) for x > 0 to double-double accuracy: split x = m * 2^e with
// m in [0.5, 1), then log m = 2 atanh((m-1)/(m+1)) by series (|t| <= 1/3).
inline ddouble dd_log(double x) {
    int e = 0;
    double m = std::frexp(x, &e);
    // m - 1 is exact for m in [0.5, 1); m + 1 needs a two_sum.
    ddouble t = ddouble{m - 1.0} / two_sum(m, 1.0);
    ddouble t2 = t * t;
    ddouble term = t;
    ddouble sum = t;
    for (int k = 3; k < 120; k += 2) {
        term = term * t2;
        ddouble add = term / ddouble{static_cast<double>(k)};
        sum = sum + add;
        if (std::fabs(add.hi) < 1e-35 * std::fabs(sum.hi)) break;
    }
    return sum * 2.0 + dd_ln2 * static_cast<double>(e);
}

} // namespace hardylt::detail

#endif
