#ifndef HARDYLT_POTENTIAL_HPP
#define HARDYLT_POTENTIAL_HPP

#include <functional>
#include <string>
#include <vector>

namespace hardylt {

struct Segment {
    double lo, hi, value;
};

// A potential on (0, infinity) with known compact support. Three concrete
// representations (piecewise-constant, sampled table with linear
// interpolation, expression/callable); integrals against r^rpow weights are
// exact for the piecewise representation and quadrature-based otherwise.
class Potential {
public:
    enum class Kind { Piecewise, Table, Expression };

    static Potential piecewise(std::vector<Segment> segments);
    static Potential table(std::vector<double> r, std::vector<double> v);
    static Potential expression(std::function<double(double)> f, double support_lo,
                                double support_hi, std::string text = "");

    double operator()(double r) const;

    Kind kind() const { return kind_; }
    double support_lo() const { return support_lo_; }
    double support_hi() const { return support_hi_; }
    bool known_nonnegative() const { return nonnegative_; }
    const std::string& text() const { return text_; }
    const std::vector<Segment>& segments() const { return segments_; }

    // Sorted discontinuity/kink locations inside the support, endpoints included.
    std::vector<double> breakpoints() const;

    // integral over [lo,hi] of f(V(r)) r^rpow dr, where f(v) = v when
    // positive_part is false and f(v) = max(v,0)^vpow otherwise.
    double integral(double lo, double hi, double rpow, double vpow = 1.0,
                    bool positive_part = false, double tol = 1e-10) const;

    // Potential clamped at zero from below; keeps the representation kind.
    Potential positive_part() const;

private:
    Potential() = default;
    Kind kind_ = Kind::Expression;
    std::vector<Segment> segments_;
    std::vector<double> table_r_, table_v_;
    std::function<double(double)> eval_;
    double support_lo_ = 0.0, support_hi_ = 0.0;
    bool nonnegative_ = false;
    std::string text_;
};

} // namespace hardylt

#endif
