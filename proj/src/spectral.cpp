#include "hardylt/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hardylt::spectral {

namespace {

// 6-point Gauss-Legendre on [0,1]
constexpr double kGlX[6] = {0.03376524289842399, 0.16939530676686776, 0.38069040695840156,
                            0.6193095930415985, 0.8306046932331322, 0.966234757101576};
constexpr double kGlW[6] = {0.08566224618958517, 0.18038078652406930, 0.23395696728634552,
                            0.23395696728634552, 0.18038078652406930, 0.08566224618958517};

double rpow_integral(double lo, double h, double p) {
    if (p == 0.0) return h;
    if (p == 1.0) return h * (lo + 0.5 * h);
    if (lo == 0.0) return std::pow(h, p + 1.0) / (p + 1.0);
    double s = 0.0;
    for (int g = 0; g < 6; ++g) s += kGlW[g] * std::pow(lo + kGlX[g] * h, p);
    return s * h;
}

struct ElemMass {
    double m11, m12, m22;
};

// int_e r^p phi_a phi_b dr on the element [lo, lo+h]
ElemMass elem_mass(double lo, double h, double p) {
    if (p == 0.0) return {h / 3.0, h / 6.0, h / 3.0};
    if (p == 1.0)
        return {lo * h / 3.0 + h * h / 12.0, lo * h / 6.0 + h * h / 12.0,
                lo * h / 3.0 + h * h / 4.0};
    if (lo == 0.0) {
        // exact moments of t^p against the P1 basis, p > -1
        const double mu0 = std::pow(h, p + 1.0) / (p + 1.0);
        const double mu1 = std::pow(h, p + 2.0) / (p + 2.0);
        const double mu2 = std::pow(h, p + 3.0) / (p + 3.0);
        return {(h * h * mu0 - 2.0 * h * mu1 + mu2) / (h * h), (h * mu1 - mu2) / (h * h),
                mu2 / (h * h)};
    }
    double m11 = 0.0, m12 = 0.0, m22 = 0.0;
    for (int g = 0; g < 6; ++g) {
        const double t = kGlX[g], w = kGlW[g] * h * std::pow(lo + t * h, p);
        m11 += w * (1.0 - t) * (1.0 - t);
        m12 += w * t * (1.0 - t);
        m22 += w * t * t;
    }
    return {m11, m12, m22};
}

// Generic P1 assembly of  a[w] = int r^sp |w'|^2 - int vbar r^mp |w|^2,
// b[w] = int r^mp |w|^2  over the given nodes.
Assembled assemble_fem(const std::vector<double>& nodes, double stiff_pow, double mass_pow,
                       const std::function<double(double, double)>& cell_v,
                       bool dirichlet_left, bool dirichlet_right) {
    const int nn = static_cast<int>(nodes.size());
    if (nn < 3) throw std::invalid_argument("assemble_fem: too few nodes");
    std::vector<double> ad(nn, 0.0), ao(nn - 1, 0.0), bd(nn, 0.0), bo(nn - 1, 0.0);

    for (int e = 0; e + 1 < nn; ++e) {
        const double lo = nodes[e], h = nodes[e + 1] - lo;
        if (!(h > 0.0)) throw std::invalid_argument("assemble_fem: nodes not increasing");
        const double k = rpow_integral(lo, h, stiff_pow) / (h * h);
        const ElemMass m = elem_mass(lo, h, mass_pow);
        const double v = cell_v ? cell_v(lo, lo + h) : 0.0;
        ad[e] += k - v * m.m11;
        ad[e + 1] += k - v * m.m22;
        ao[e] += -k - v * m.m12;
        bd[e] += m.m11;
        bd[e + 1] += m.m22;
        bo[e] += m.m12;
    }

    Assembled out;
    out.nodes = nodes;
    const int i0 = dirichlet_left ? 1 : 0;
    const int i1 = dirichlet_right ? nn - 1 : nn;
    out.a_diag.assign(ad.begin() + i0, ad.begin() + i1);
    out.b_diag.assign(bd.begin() + i0, bd.begin() + i1);
    out.a_off.assign(ao.begin() + i0, ao.begin() + (i1 - 1));
    out.b_off.assign(bo.begin() + i0, bo.begin() + (i1 - 1));
    return out;
}

// Sturm count: number of pencil eigenvalues strictly below lam.
int count_below(const Assembled& a, double lam) {
    const int n = a.dim();
    int cnt = 0;
    double d_prev = 1.0;
    constexpr double pivmin = 1e-290;
    for (int i = 0; i < n; ++i) {
        double d = a.a_diag[i] - lam * a.b_diag[i];
        if (i > 0) {
            const double e = a.a_off[i - 1] - lam * a.b_off[i - 1];
            d -= e * e / d_prev;
        }
        if (d < 0.0) ++cnt;
        if (std::fabs(d) < pivmin) d = d < 0.0 ? -pivmin : pivmin;
        d_prev = d;
    }
    return cnt;
}

void append_geometric(std::vector<double>& nodes, double from, double to, int count) {
    // count nodes strictly between from and to, geometric in the ratio to/from
    if (count <= 0 || from <= 0.0 || to <= 0.0 || from == to) return;
    const double q = std::pow(to / from, 1.0 / (count + 1));
    double r = from;
    for (int j = 0; j < count; ++j) {
        r *= q;
        nodes.push_back(r);
    }
}

void append_uniform(std::vector<double>& nodes, double from, double to, int count) {
    for (int j = 0; j <= count; ++j) nodes.push_back(from + (to - from) * j / count);
}

std::vector<double> finalize_nodes(std::vector<double> nodes,
                                   const std::vector<double>& breakpoints, double dom_lo,
                                   double dom_hi) {
    for (double b : breakpoints)
        if (b > dom_lo && b < dom_hi) nodes.push_back(b);
    nodes.push_back(dom_lo);
    nodes.push_back(dom_hi);
    std::sort(nodes.begin(), nodes.end());
    std::vector<double> out;
    out.reserve(nodes.size());
    for (double r : nodes) {
        if (r < dom_lo || r > dom_hi) continue;
        if (!out.empty() && r - out.back() < 1e-13 * (1.0 + std::fabs(r))) continue;
        out.push_back(r);
    }
    return out;
}

// Half-line node layout on [0, r_max]: uniform core around the support,
// geometric tails toward the origin and the far field (ratio ~1.02).
std::vector<double> halfline_nodes(int n, double support_lo, double support_hi,
                                   double r_max, GridKind kind,
                                   const std::vector<double>& breakpoints) {
    std::vector<double> nodes;
    if (kind == GridKind::Uniform) {
        append_uniform(nodes, 0.0, r_max, n);
        return finalize_nodes(std::move(nodes), breakpoints, 0.0, r_max);
    }
    const double core_lo = 0.5 * support_lo;
    const double core_hi = std::min(r_max, support_hi + 2.0);
    const int n_core = std::max(16, static_cast<int>(0.55 * n));
    const int n_left = std::max(8, static_cast<int>(0.15 * n));
    const int n_right = std::max(8, static_cast<int>(0.30 * n));
    nodes.push_back(0.0);
    append_geometric(nodes, core_lo * 1e-6, core_lo, n_left);
    nodes.push_back(core_lo * 1e-6);
    append_uniform(nodes, core_lo, core_hi, n_core);
    if (core_hi < r_max) append_geometric(nodes, core_hi, r_max, n_right);
    return finalize_nodes(std::move(nodes), breakpoints, 0.0, r_max);
}

double tridiag_bisect_eigenvalue(const Assembled& a, int j, double lo, double hi,
                                 double rel_tol) {
    // invariant: count(lo) < j <= count(hi)
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (count_below(a, mid) >= j)
            hi = mid;
        else
            lo = mid;
        if (hi - lo <= rel_tol * std::max({std::fabs(lo), std::fabs(hi), 1e-30})) break;
    }
    return 0.5 * (lo + hi);
}

} // namespace

std::vector<double> pencil_negative_eigenvalues(const Assembled& a, double rel_tol) {
    const int m = count_below(a, 0.0);
    if (m == 0) return {};
    double lo = -1.0;
    while (count_below(a, lo) > 0) {
        lo *= 4.0;
        if (lo < -1e60) throw std::runtime_error("pencil: spectrum unbounded below?");
    }
    std::vector<double> eig(m);
    for (int j = 1; j <= m; ++j)
        eig[j - 1] = tridiag_bisect_eigenvalue(a, j, lo, 0.0, rel_tol);
    return eig;
}

std::vector<double> pencil_eigenvector(const Assembled& a, double lambda) {
    const int n = a.dim();
    // shifted pencil, LU with partial pivoting (tridiagonal + fill-in band)
    const double scale = std::fabs(lambda) + 1.0;
    const double shift = lambda - 1e-9 * scale;
    std::vector<double> diag(n), lower(n - 1), upper(n - 1);
    for (int i = 0; i < n; ++i) diag[i] = a.a_diag[i] - shift * a.b_diag[i];
    for (int i = 0; i + 1 < n; ++i) lower[i] = upper[i] = a.a_off[i] - shift * a.b_off[i];

    std::vector<double> x(n, 1.0);
    for (int iter = 0; iter < 4; ++iter) {
        // rhs = B x
        std::vector<double> rhs(n);
        for (int i = 0; i < n; ++i) {
            rhs[i] = a.b_diag[i] * x[i];
            if (i > 0) rhs[i] += a.b_off[i - 1] * x[i - 1];
            if (i + 1 < n) rhs[i] += a.b_off[i] * x[i + 1];
        }
        std::vector<double> d = diag, l = lower, u = upper, c(n, 0.0), y = rhs;
        for (int i = 0; i + 1 < n; ++i) {
            if (std::fabs(l[i]) > std::fabs(d[i])) {
                std::swap(d[i], l[i]);
                std::swap(u[i], d[i + 1]);
                if (i + 2 < n) {
                    c[i] = u[i + 1];
                    u[i + 1] = 0.0;
                }
                std::swap(y[i], y[i + 1]);
            }
            const double f = l[i] / d[i];
            d[i + 1] -= f * u[i];
            if (i + 2 < n) u[i + 1] -= f * c[i];
            y[i + 1] -= f * y[i];
        }
        for (int i = n - 1; i >= 0; --i) {
            double s = y[i];
            if (i + 1 < n) s -= u[i] * x[i + 1];
            if (i + 2 < n) s -= c[i] * x[i + 2];
            x[i] = s / d[i];
        }
        double nrm = 0.0;
        for (double v : x) nrm = std::max(nrm, std::fabs(v));
        for (double& v : x) v /= nrm;
    }
    return x;
}

double SpectrumResult::riesz(double g) const {
    double s = 0.0;
    for (double lam : eigenvalues) s += std::pow(-lam, g);
    return s;
}

SpectrumResult negative_spectrum(const Problem& p, double gamma) {
    if (!(gamma >= 0.0)) throw std::domain_error("negative_spectrum: gamma must be >= 0");

    const Assembled coarse = p.assemble(p.n);
    const Assembled fine = p.assemble(2 * p.n);
    const std::vector<double> e1 = pencil_negative_eigenvalues(coarse);
    const std::vector<double> e2 = pencil_negative_eigenvalues(fine);

    // Sturm-count noise floor: pivot rounding acts like an eigenvalue
    // perturbation of order eps * ||A|| / ||B||, which matters when the pencil
    // has a near-zero mode (the interval operator's constant direction).
    double a_max = 0.0, b_max = 0.0;
    for (double x : fine.a_diag) a_max = std::max(a_max, std::fabs(x));
    for (double x : fine.b_diag) b_max = std::max(b_max, x);
    const double noise = 64.0 * 2.3e-16 * a_max / b_max;

    SpectrumResult out;
    out.gamma = gamma;
    out.n_used = 2 * p.n;
    for (std::size_t i = 0; i < e2.size(); ++i) {
        double lam, err;
        bool converging = false;
        if (i < e1.size()) {
            const double diff = e2[i] - e1[i];
            lam = e2[i] + diff / 3.0; // Richardson, O(h^2) pair
            err = std::fabs(diff) / 3.0 + noise + 1e-12 * (1.0 + std::fabs(lam));
            // rounding noise grows under refinement while genuine eigenvalues
            // settle, so demand some evidence of convergence
            converging = std::fabs(diff) <= 0.5 * std::fabs(e2[i]);
        } else {
            lam = e2[i];
            err = std::fabs(lam); // appeared only on the fine grid
        }
        if (lam >= 0.0 || !converging || std::fabs(lam) < 3.0 * err) {
            out.unresolved.push_back(lam);
            continue;
        }
        out.eigenvalues.push_back(lam);
        out.error_estimates.push_back(err);
    }
    out.riesz_mean = out.riesz(gamma);
    return out;
}

Problem assemble_halfline(const Potential& v, const Discretization& d) {
    const double r_max = d.r_max > 0.0 ? d.r_max : 3.0 * v.support_hi() + 10.0;
    const auto bps = v.breakpoints();
    const double slo = v.support_lo(), shi = v.support_hi();
    const GridKind kind = d.grid;
    Problem p;
    p.n = d.n;
    p.kind = "halfline";
    p.assemble = [=](int n) {
        auto nodes = halfline_nodes(n, slo, shi, r_max, kind, bps);
        auto cell_v = [=](double lo, double hi) {
            const double mass = rpow_integral(lo, hi - lo, 1.0);
            return v.integral(lo, hi, 1.0) / mass;
        };
        return assemble_fem(nodes, 1.0, 1.0, cell_v, false, true);
    };
    return p;
}

Problem assemble_interval(const Potential& v, double b, const Discretization& d) {
    if (!(b > 0.0)) throw std::domain_error("assemble_interval: b must be positive");
    const auto bps = v.breakpoints();
    Problem p;
    p.n = d.n > 0 ? d.n : 2000;
    p.kind = "interval";
    p.assemble = [=](int n) {
        std::vector<double> nodes;
        append_uniform(nodes, b, b + 1.0, n);
        nodes = finalize_nodes(std::move(nodes), bps, b, b + 1.0);
        auto cell_v = [=](double lo, double hi) {
            const double mass = rpow_integral(lo, hi - lo, 1.0);
            return v.integral(lo, hi, 1.0) / mass;
        };
        return assemble_fem(nodes, 1.0, 1.0, cell_v, false, false);
    };
    return p;
}

Problem assemble_sigma(const Potential& v, double sigma, const Discretization& d) {
    if (sigma == 2.0)
        throw std::domain_error("assemble_sigma: sigma = 2 uses the whole-line reduction");
    const double q = 0.5 * (2.0 - sigma); // t = r^q maps to the H_0 geometry
    const double t_slo = std::min(std::pow(v.support_lo(), q), std::pow(v.support_hi(), q));
    const double t_shi = std::max(std::pow(v.support_lo(), q), std::pow(v.support_hi(), q));
    const double t_max = 3.0 * t_shi + 10.0; // truncation policy lives in t-space
    const auto bps = v.breakpoints();
    const double mass_pow = 1.0 - sigma;
    Problem p;
    p.n = d.n;
    p.kind = "sigma";
    p.assemble = [=](int n) {
        // lay the grid out in t-space, then map nodes back to r-space
        auto t_nodes = halfline_nodes(n, t_slo, t_shi, t_max, GridKind::Geometric, {});
        std::vector<double> nodes;
        nodes.reserve(t_nodes.size());
        for (double t : t_nodes)
            if (t > 0.0) nodes.push_back(std::pow(t, 1.0 / q));
        if (q > 0.0) nodes.push_back(0.0); // t = 0 corresponds to r = 0
        std::sort(nodes.begin(), nodes.end());
        const double dom_lo = nodes.front(), dom_hi = nodes.back();
        nodes = finalize_nodes(std::move(nodes), bps, dom_lo, dom_hi);
        auto cell_v = [=](double lo, double hi) {
            const double mass = rpow_integral(lo, hi - lo, mass_pow);
            return v.integral(lo, hi, mass_pow) / mass;
        };
        // Dirichlet on the truncated decay side: r_max for sigma < 2,
        // r_min for sigma > 2 (whose origin plays the role of infinity).
        const bool dir_left = sigma > 2.0;
        const bool dir_right = sigma < 2.0;
        return assemble_fem(nodes, 1.0, mass_pow, cell_v, dir_left, dir_right);
    };
    return p;
}

Problem assemble_wholeline(std::function<double(double)> w, double support_lo,
                           double support_hi, double L, int n) {
    Problem p;
    p.n = n;
    p.kind = "wholeline";
    p.assemble = [=](int nn) {
        std::vector<double> nodes;
        append_uniform(nodes, -L, L, nn);
        nodes.push_back(support_lo);
        nodes.push_back(support_hi);
        std::sort(nodes.begin(), nodes.end());
        std::vector<double> clean;
        for (double x : nodes) {
            if (x < -L || x > L) continue;
            if (!clean.empty() && x - clean.back() < 1e-13 * (1.0 + std::fabs(x))) continue;
            clean.push_back(x);
        }
        auto cell_v = [=](double lo, double hi) {
            double s = 0.0;
            for (int g = 0; g < 6; ++g) s += kGlW[g] * w(lo + kGlX[g] * (hi - lo));
            return s;
        };
        return assemble_fem(clean, 0.0, 0.0, cell_v, true, true);
    };
    return p;
}

} // namespace hardylt::spectral
