#pragma once

#include "dosc/oscillator.hpp"

namespace dosc::darboux {

using num::cplx;
using osc::ModelParams;
using osc::RadialGrid;
using osc::StateVector;

/// First-order Darboux layer for a fixed parameter set. Sign convention:
/// L0 = u'/u, L = -L0 + d/dx, L+ = -L0 - d/dx, so that L u_p = 0 and
/// A_p = -2 (ln u_p)'' hold simultaneously.
struct DarbouxContext {
    ModelParams params;
};

DarbouxContext make_context(const ModelParams& params);

// Transformation function u_p(x) = x^{2k-1/2} L_p^{2k-1}(-x^2/2) e^{x^2/4}.
// Throws if the Laguerre factor vanishes at x (it cannot for x > 0).
double u_p(const DarbouxContext& ctx, double x);

// L0 = u'/u and its derivative (ln u)'' = -A_p/2, both closed form.
double L0(const DarbouxContext& ctx, double x);
double L0_prime(const DarbouxContext& ctx, double x);

// Pointwise application of L and L+ given the value and analytic derivative.
template <typename T>
T apply_L(const DarbouxContext& ctx, double x, T f, T f_prime) {
    return -L0(ctx, x) * f + f_prime;
}
template <typename T>
T apply_L_dag(const DarbouxContext& ctx, double x, T f, T f_prime) {
    return -L0(ctx, x) * f - f_prime;
}

// Potential difference A_p(x) and transformed potential V_p = V_0 + A_p.
double A_p(const DarbouxContext& ctx, double x);
double V_p(const DarbouxContext& ctx, double x);

// Normalization N_n = (2p + 4k + 2n)^{-1/2}.
double norm_const(const DarbouxContext& ctx, int n);

// Transformed eigenfunction phi_n = N_n L psi_n and its analytic derivative.
double phi(const DarbouxContext& ctx, int n, double x);
double phi_prime(const DarbouxContext& ctx, int n, double x);

// h_1 = h_0 + A_p by 5-point stencil; uniform grid required.
StateVector apply_h1(const DarbouxContext& ctx, const StateVector& state);

// Max-norm of (L h_0 - h_1 L) f over the interior window of a uniform grid;
// f and f' are supplied analytically, the second derivatives come from
// stencils so the check stays independent of the eigen-equation.
double intertwining_residual(const DarbouxContext& ctx,
                             const std::function<double(double)>& f,
                             const std::function<double(double)>& f_prime,
                             const RadialGrid& grid, double x_lo, double x_hi);

// (p+ coefficient at n, p- coefficient at n): p+-|phi_n> = c |phi_{n+-1}>.
std::pair<double, double> ladder_matrix_elements(const DarbouxContext& ctx, int n);

// Diagonal of [p-, p+] on |phi_n> from matrix elements (first) and the
// closed-form polynomial 2(2k(1-k) - p0 alpha + 4 p0^2)(2 p0 - alpha) at
// p0 = k + n (second).
std::pair<double, double> nonlinear_commutator_check(const DarbouxContext& ctx, int n);

}  // namespace dosc::darboux
