#ifndef HARDYLT_DELTABOUND_HPP
#define HARDYLT_DELTABOUND_HPP

namespace hardylt::deltabound {

// Critical coupling of the delta well at R: beta(R) = 1/(R I0(R) K0(R)),
// the value for which -d^2/dr^2 - 1/(4r^2) - beta delta_R has eigenvalue -1.
struct DeltaResult {
    double R;
    double beta;
    double i0k0; // I0(R) K0(R)

    double lower_bound(double alpha) const; // R^{1-alpha} I0(R) K0(R)
};

DeltaResult beta_of_R(double R);

// Eigenfunction of the critical delta operator at energy -1:
// sqrt(r) I0(r) K0(R) below R, sqrt(r) K0(r) I0(R) above.
double delta_eigenfunction(double R, double r);

// Minimum of beta over R in [0.1, 20] (unimodality screened on a grid first).
DeltaResult minimize_beta(double search_tol = 1e-10);

struct LowerBound {
    double value;    // sup_R R^{1-alpha} I0(R) K0(R)
    double argmax_R;
    bool attained;   // whether the sup is attained at finite R on the scan
};

LowerBound lower_bound_alpha(double alpha, double search_tol = 1e-10);

} // namespace hardylt::deltabound

#endif
