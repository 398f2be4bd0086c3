#include "hardylt/potential.hpp"
#include "hardylt/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hardylt {

namespace {

// int_lo^hi r^p dr, p > -1
double rpow_moment(double lo, double hi, double p) {
    if (p == 0.0) return hi - lo;
    if (p == -1.0) return std::log(hi / lo);
    return (std::pow(hi, p + 1.0) - std::pow(lo, p + 1.0)) / (p + 1.0);
}

} // namespace

Potential Potential::piecewise(std::vector<Segment> segments) {
    if (segments.empty()) throw std::invalid_argument("Potential: no segments");
    std::sort(segments.begin(), segments.end(),
              [](const Segment& a, const Segment& b) { return a.lo < b.lo; });
    for (const auto& s : segments)
        if (!(s.lo > 0.0 && s.hi > s.lo) || !std::isfinite(s.value))
            throw std::invalid_argument("Potential: invalid segment");
    for (std::size_t i = 1; i < segments.size(); ++i)
        if (segments[i].lo < segments[i - 1].hi - 1e-15)
            throw std::invalid_argument("Potential: overlapping segments");
    Potential p;
    p.kind_ = Kind::Piecewise;
    p.support_lo_ = segments.front().lo;
    p.support_hi_ = segments.back().hi;
    p.nonnegative_ = std::all_of(segments.begin(), segments.end(),
                                 [](const Segment& s) { return s.value >= 0.0; });
    p.segments_ = std::move(segments);
    return p;
}

Potential Potential::table(std::vector<double> r, std::vector<double> v) {
    if (r.size() != v.size() || r.size() < 2)
        throw std::invalid_argument("Potential: table needs >= 2 rows");
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (!(std::isfinite(r[i]) && std::isfinite(v[i])))
            throw std::invalid_argument("Potential: non-finite table entry");
        if (i > 0 && !(r[i] > r[i - 1]))
            throw std::invalid_argument("Potential: table r must be strictly increasing");
    }
    if (!(r.front() > 0.0)) throw std::invalid_argument("Potential: table r must be positive");
    Potential p;
    p.kind_ = Kind::Table;
    p.support_lo_ = r.front();
    p.support_hi_ = r.back();
    p.nonnegative_ = std::all_of(v.begin(), v.end(), [](double x) { return x >= 0.0; });
    p.table_r_ = std::move(r);
    p.table_v_ = std::move(v);
    return p;
}

Potential Potential::expression(std::function<double(double)> f, double support_lo,
                                double support_hi, std::string text) {
    if (!(support_lo > 0.0 && support_hi > support_lo))
        throw std::invalid_argument("Potential: invalid support bounds");
    Potential p;
    p.kind_ = Kind::Expression;
    p.support_lo_ = support_lo;
    p.support_hi_ = support_hi;
    p.eval_ = std::move(f);
    p.text_ = std::move(text);
    // probe for sign metadata
    p.nonnegative_ = true;
    for (int i = 0; i <= 256; ++i) {
        const double r = support_lo + (support_hi - support_lo) * i / 256.0;
        const double val = p.eval_(r);
        if (!std::isfinite(val))
            throw std::invalid_argument("Potential: expression non-finite on probe grid");
        if (val < 0.0) p.nonnegative_ = false;
    }
    return p;
}

double Potential::operator()(double r) const {
    switch (kind_) {
        case Kind::Piecewise: {
            for (const auto& s : segments_)
                if (r >= s.lo && r < s.hi) return s.value;
            return 0.0;
        }
        case Kind::Table: {
            if (r <= table_r_.front() || r >= table_r_.back()) {
                if (r == table_r_.front()) return table_v_.front();
                if (r == table_r_.back()) return table_v_.back();
                return 0.0;
            }
            const auto it = std::upper_bound(table_r_.begin(), table_r_.end(), r);
            const std::size_t i = static_cast<std::size_t>(it - table_r_.begin());
            const double t = (r - table_r_[i - 1]) / (table_r_[i] - table_r_[i - 1]);
            return table_v_[i - 1] + t * (table_v_[i] - table_v_[i - 1]);
        }
        case Kind::Expression:
            if (r < support_lo_ || r > support_hi_) return 0.0;
            return eval_(r);
    }
    return 0.0;
}

std::vector<double> Potential::breakpoints() const {
    std::vector<double> pts;
    switch (kind_) {
        case Kind::Piecewise:
            for (const auto& s : segments_) {
                pts.push_back(s.lo);
                pts.push_back(s.hi);
            }
            break;
        case Kind::Table:
            pts = table_r_;
            break;
        case Kind::Expression:
            pts = {support_lo_, support_hi_};
            break;
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

double Potential::integral(double lo, double hi, double rpow, double vpow,
                           bool positive_part, double tol) const {
    if (!(hi >= lo)) throw std::invalid_argument("Potential::integral: hi < lo");
    lo = std::max(lo, support_lo_);
    hi = std::min(hi, support_hi_);
    if (hi <= lo) return 0.0;

    auto apply = [&](double v) {
        if (!positive_part) return v;
        return v > 0.0 ? std::pow(v, vpow) : 0.0;
    };

    if (kind_ == Kind::Piecewise) {
        double sum = 0.0;
        for (const auto& s : segments_) {
            const double a = std::max(lo, s.lo), b = std::min(hi, s.hi);
            if (b > a) sum += apply(s.value) * rpow_moment(a, b, rpow);
        }
        return sum;
    }

    auto f = [&](double r) { return apply((*this)(r)) * std::pow(r, rpow); };
    std::vector<double> pts = breakpoints();
    pts.insert(pts.begin(), lo);
    pts.push_back(hi);
    std::sort(pts.begin(), pts.end());
    double sum = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const double a = std::max(lo, pts[i - 1]), b = std::min(hi, pts[i]);
        if (b > a) sum += numerics::adaptive_simpson(f, a, b, tol);
    }
    return sum;
}

Potential Potential::positive_part() const {
    if (nonnegative_) return *this;
    switch (kind_) {
        case Kind::Piecewise: {
            std::vector<Segment> segs = segments_;
            for (auto& s : segs) s.value = std::max(s.value, 0.0);
            return piecewise(std::move(segs));
        }
        case Kind::Table: {
            std::vector<double> v = table_v_;
            for (auto& x : v) x = std::max(x, 0.0);
            return table(table_r_, std::move(v));
        }
        case Kind::Expression: {
            auto f = eval_;
            return expression([f](double r) { return std::max(f(r), 0.0); }, support_lo_,
                              support_hi_, text_.empty() ? "" : "max(0," + text_ + ")");
        }
    }
    return *this;
}

} // namespace hardylt
