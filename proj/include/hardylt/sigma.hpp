#ifndef HARDYLT_SIGMA_HPP
#define HARDYLT_SIGMA_HPP

#include "hardylt/potential.hpp"

#include <functional>

namespace hardylt::sigma {

// Parameter mapping of the sigma-family bound onto the base (sigma = 0) bound.
struct SigmaParams {
    double sigma;
    double gamma;
    double alpha;
    double mapped_alpha;       // (2 alpha + sigma)/(2 - sigma)
    double prefactor;          // |2/(2-sigma)|^{mapped_alpha}
    double energy_scale;       // ((2-sigma)/2)^2
    double potential_exponent; // gamma + (1+alpha)/(2-sigma)
};

// Validates the hypothesis branch for sigma != 2 and computes the mapped
// exponents; throws std::domain_error naming the violated condition.
SigmaParams map_params(double sigma, double gamma, double alpha);

// Pushed-forward potential V_sigma(r) = (2/(2-sigma))^2 V(r^{2/(2-sigma)});
// piecewise potentials map to piecewise, anything else to a composition.
Potential transform_potential(const Potential& v, double sigma);

// sigma = 2 reduction: potential on the whole line after the log change of
// variables, V2(x) = V(e^x).
struct WholeLinePotential {
    std::function<double(double)> eval;
    double support_lo; // log of the original support bounds
    double support_hi;
};

WholeLinePotential map_sigma2(const Potential& v);

} // namespace hardylt::sigma

#endif
