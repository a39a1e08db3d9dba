#pragma once

#include <complex>
#include <vector>

#include "dosc/numerics.hpp"

namespace dosc::osc {

using num::cplx;

/// Parameter bundle fixing both quantum systems. Always build through
/// make_params so the derived quantities stay consistent.
struct ModelParams {
    double b;      // barrier strength, >= 0
    double k;      // Bargmann index, 1/2 + sqrt(1+4b)/4
    int p;         // transformation-function index, >= 0
    double alpha;  // factorization energy, -2(k+p)

    double ground_energy() const { return 2.0 * k; }
    double planck() const { return 1.0 / (2.0 * k); }
};

ModelParams make_params(double b, int p);

// E_n = 2n + 2k.
double energy(const ModelParams& params, int n);

/// Quadrature (or uniform stencil) nodes on the half line. Nodes are strictly
/// positive; the origin is excluded by the zero boundary condition.
struct RadialGrid {
    std::vector<double> nodes;
    std::vector<double> weights;
    bool uniform = false;
    double spacing = 0.0;

    // Composite Gauss-Legendre grid over (0, x_max] for inner products.
    static RadialGrid quadrature(double x_max, int panels = 40,
                                 int nodes_per_panel = 24);
    // Uniform grid x_j = j*h, j = 1..n, for stencil operations.
    static RadialGrid uniform_grid(double x_max, int n);
};

// x_max = 2 sqrt(2 E_nmax) + 10: well past the classical turning point.
double reference_x_max(const ModelParams& params, int n_max);

struct StateVector {
    const RadialGrid* grid;
    std::vector<cplx> values;
};

cplx inner(const StateVector& a, const StateVector& b);
double norm_sq(const StateVector& a);

// V_0(x) = x^2/4 + b/x^2.
double potential_v0(const ModelParams& params, double x);

// Normalized eigenfunction psi_n(x) and its analytic first/second derivatives
// (Laguerre derivative identities, normalization in log space).
double psi(const ModelParams& params, int n, double x);
double psi_prime(const ModelParams& params, int n, double x);
double psi_second(const ModelParams& params, int n, double x);

// h_0 applied by 5-point stencil (one-sided at the ends); requires a uniform
// grid with at least 5 nodes.
StateVector apply_h0(const ModelParams& params, const StateVector& state);

// Coherent expansion coefficient a_n = (-1)^n sqrt(Gamma(2k+n)/(n! Gamma(2k))).
double coherent_coeff(const ModelParams& params, int n);

// Closed-form coherent state psi_z(x) and its analytic x-derivatives.
cplx coherent_psi(const ModelParams& params, cplx z, double x);
cplx coherent_psi_prime(const ModelParams& params, cplx z, double x);
cplx coherent_psi_second(const ModelParams& params, cplx z, double x);

// Truncated series N_0z sum a_n z^n psi_n(x); truncation at relative 1e-14,
// capped at n = 400.
cplx coherent_psi_series(const ModelParams& params, cplx z, double x);

// Weight of d mu against the area element, as a function of s = |z|^2.
double measure_mu_weight(const ModelParams& params, double s);

// (m,n) element of the coherent-state resolution of identity in the {|n>}
// basis; angular integral analytic, radial by graded quadrature.
cplx initial_gram_element(const ModelParams& params, int m, int n);

// 3/16 - b/4 ( = k(1-k), asserted internally).
double casimir_value(const ModelParams& params);

}  // namespace dosc::osc
