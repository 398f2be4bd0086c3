#ifndef HARDYLT_PARTITION_HPP
#define HARDYLT_PARTITION_HPP

#include "hardylt/potential.hpp"

#include <optional>
#include <vector>

namespace hardylt::partition {

struct PartitionResult {
    double alpha = 0.0;
    double k = 0.0;
    double psi_k = 0.0;                     // max{S_alpha, C_alpha(k)}
    std::vector<double> breakpoints;        // a_1 < ... < a_N; a_0 = 0 and a_{N+1} = inf implied
    std::vector<double> interval_integrals; // int_{a_j}^{a_{j+1}} V r^alpha dr, j = 1..N-1
    bool trivial = false;                   // support fit into a single interval
};

struct BoundCertificate {
    double gamma = 0.0;
    double alpha = 0.0;
    double k = 0.0;
    double s_alpha = 0.0;
    double c_alpha_k = 0.0;
    double psi_k = 0.0;
    PartitionResult partition;
    std::vector<double> per_interval_bounds; // k^{1-a} Psi(k) * interval integral
    double weighted_integral = 0.0;          // int V_+^{gamma+(1+a)/2} r^a dr
    double constant_used = 0.0;
    double total = 0.0;
    bool used_positive_part = false;
};

// Recursive breakpoints: a_{j+1} solves
//   (a - a_j)^{1-alpha} int_{a_j}^{a} V r^alpha dr = 1/psi_k
// by bisection of the nondecreasing left side; stops once the support is covered.
PartitionResult build_partition(const Potential& v, double alpha, double k, double psi_k,
                                double quad_tol = 1e-10);

// Moment lift: C_{gt} = B_{gt,gb}^{-1} B_{gt+(1+a)/2, gb+(1+a)/2} C_{gb},
// with B_{s,t} = B(s-t, t+1) in terms of the Euler beta function.
double aizenman_lieb_lift(double gamma_target, double gamma_base, double alpha,
                          double base_constant);

// Default spectral parameter: 3.555 for alpha = 0, otherwise the minimizer of
// k^{1-alpha} max{S_alpha, C_alpha(k)} over a log-k golden-section search.
// Results are memoized per alpha.
double default_k(double alpha);

// Assembles the full right-hand side of the eigenvalue-moment bound.
BoundCertificate certify(const Potential& v, double gamma, double alpha,
                         std::optional<double> k = std::nullopt, double tol = 1e-10);

} // namespace hardylt::partition

#endif
