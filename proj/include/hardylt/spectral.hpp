#ifndef HARDYLT_SPECTRAL_HPP
#define HARDYLT_SPECTRAL_HPP

#include "hardylt/potential.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hardylt::spectral {

enum class GridKind { Uniform, Geometric };

struct Discretization {
    GridKind grid = GridKind::Geometric;
    int n = 4000;        // target node count
    double r_min = 0.0;  // 0 = automatic
    double r_max = 0.0;  // 0 = automatic
};

// P1 finite-element discretization of a weighted form, as the generalized
// symmetric tridiagonal pencil A w = lambda B w (B positive definite).
struct Assembled {
    std::vector<double> nodes; // grid including constrained endpoints
    std::vector<double> a_diag, a_off;
    std::vector<double> b_diag, b_off;
    int dim() const { return static_cast<int>(a_diag.size()); }
};

// A rebuildable eigenproblem; assemble(n) produces the pencil at a given
// grid resolution so refinement studies reuse the same geometry policy.
struct Problem {
    std::function<Assembled(int)> assemble;
    int n = 4000;
    std::string kind;
};

struct SpectrumResult {
    std::vector<double> eigenvalues;     // resolved negative eigenvalues, ascending
    std::vector<double> error_estimates; // one per resolved eigenvalue
    std::vector<double> unresolved;      // shallow candidates excluded from the mean
    double gamma = 0.0;
    double riesz_mean = 0.0; // sum |lambda|^gamma over resolved eigenvalues
    int n_used = 0;

    double riesz(double g) const;
};

// Half-line operator -d^2/dr^2 - 1/(4r^2) - V in the ground-state variable
// w = u/sqrt(r): form int |w'|^2 r dr - int V |w|^2 r dr, Dirichlet at r_max.
Problem assemble_halfline(const Potential& v, const Discretization& d = {});

// Interval operator H_b - V on (b, b+1) with natural boundary conditions
// (free endpoint values of the substituted form).
Problem assemble_interval(const Potential& v, double b, const Discretization& d = {});

// sigma-family operator H_sigma - V, sigma != 2: stiffness weight r, mass
// weight r^{1-sigma} in the substituted variable.
Problem assemble_sigma(const Potential& v, double sigma, const Discretization& d = {});

// Whole-line reference operator -d^2/dx^2 - W on [-L, L] with Dirichlet ends
// (used for the sigma = 2 reduction).
Problem assemble_wholeline(std::function<double(double)> w, double support_lo,
                           double support_hi, double L, int n);

// All eigenvalues below zero by Sturm-sequence bisection on the pencil,
// with a Richardson error estimate from one grid doubling. Eigenvalues with
// |lambda| below 3x their error estimate are reported as unresolved.
SpectrumResult negative_spectrum(const Problem& p, double gamma);

// Eigenvalues below zero of a single assembled pencil (no refinement).
std::vector<double> pencil_negative_eigenvalues(const Assembled& a, double rel_tol = 1e-12);

// First eigenvector by inverse iteration at the given shift (sanity checks).
std::vector<double> pencil_eigenvector(const Assembled& a, double lambda);

} // namespace hardylt::spectral

#endif
