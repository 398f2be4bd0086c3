#include "hardylt/sigma.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hardylt::sigma {

SigmaParams map_params(double sigma, double gamma, double alpha) {
    if (sigma == 2.0)
        throw std::domain_error("map_params: sigma = 2 is handled by map_sigma2");
    if (!(gamma > 0.0)) throw std::domain_error("map_params: violated condition gamma > 0");

    if (sigma > 2.0) {
        if (!(alpha <= -0.5 * sigma))
            throw std::domain_error("map_params: violated condition alpha <= -sigma/2 (sigma > 2)");
        if (!(gamma - (1.0 + alpha) / (sigma - 2.0) >= 1.0 - 1e-15))
            throw std::domain_error(
                "map_params: violated condition gamma - (1+alpha)/(sigma-2) >= 1");
    } else {
        if (!(alpha >= -0.5 * sigma))
            throw std::domain_error("map_params: violated condition alpha >= -sigma/2 (sigma < 2)");
        if (!(gamma + (1.0 + alpha) / (2.0 - sigma) >= 1.0 - 1e-15))
            throw std::domain_error(
                "map_params: violated condition gamma + (1+alpha)/(2-sigma) >= 1");
    }

    SigmaParams p;
    p.sigma = sigma;
    p.gamma = gamma;
    p.alpha = alpha;
    p.mapped_alpha = (2.0 * alpha + sigma) / (2.0 - sigma);
    if (!(p.mapped_alpha >= 0.0 && p.mapped_alpha < 1.0))
        throw std::domain_error("map_params: mapped alpha (2a+s)/(2-s) outside [0,1)");
    if (!(gamma >= 0.5 * (1.0 - p.mapped_alpha) - 1e-15))
        throw std::domain_error("map_params: violated condition gamma >= (1-mapped_alpha)/2");
    p.prefactor = std::pow(std::fabs(2.0 / (2.0 - sigma)), p.mapped_alpha);
    p.energy_scale = 0.25 * (2.0 - sigma) * (2.0 - sigma);
    p.potential_exponent = gamma + (1.0 + alpha) / (2.0 - sigma);
    return p;
}

Potential transform_potential(const Potential& v, double sigma) {
    if (sigma == 2.0)
        throw std::domain_error("transform_potential: sigma = 2 is handled by map_sigma2");
    const double e = 2.0 / (2.0 - sigma); // V_sigma(r) = e^2 V(r^e)
    const double scale = e * e;

    if (v.kind() == Potential::Kind::Piecewise) {
        std::vector<Segment> segs;
        for (const Segment& s : v.segments()) {
            double lo = std::pow(s.lo, 1.0 / e);
            double hi = std::pow(s.hi, 1.0 / e);
            if (lo > hi) std::swap(lo, hi); // e < 0 reverses orientation
            segs.push_back({lo, hi, scale * s.value});
        }
        return Potential::piecewise(std::move(segs));
    }

    double lo = std::pow(v.support_lo(), 1.0 / e);
    double hi = std::pow(v.support_hi(), 1.0 / e);
    if (lo > hi) std::swap(lo, hi);
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw std::runtime_error("transform_potential: support transforms to unbounded set");
    Potential vc = v;
    return Potential::expression(
        [vc, e, scale](double r) { return scale * vc(std::pow(r, e)); }, lo, hi);
}

WholeLinePotential map_sigma2(const Potential& v) {
    if (!(v.support_lo() > 0.0))
        throw std::domain_error("map_sigma2: support must stay away from 0");
    Potential vc = v;
    return {[vc](double x) { return vc(std::exp(x)); }, std::log(v.support_lo()),
            std::log(v.support_hi())};
}

} // namespace hardylt::sigma
