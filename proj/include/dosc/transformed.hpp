#pragma once

#include "dosc/darboux.hpp"

namespace dosc::transformed {

using num::cplx;
using osc::ModelParams;

// N_1z as a function of s = |z|^2: sqrt((1-s)/(4k+2p-2ps)).
double N1z(const ModelParams& params, double s);

// Coefficient b_n = a_n N_0 / N_n.
double b_coeff(const ModelParams& params, int n);

// Transformed coherent state phi_z(x) = N_1z (L psi_z)(x), analytic derivative
// of the closed-form psi_z.
cplx phi_z(const ModelParams& params, cplx z, double x);

// Series route N sum b_n z^n phi_n(x), N = N_0z N_1z / N_0; truncation at
// relative 1e-14, capped at n = 400.
cplx phi_z_series(const ModelParams& params, cplx z, double x);

// Resolution-of-identity density h(x) on (0,1), x the squared radius.
double measure_h(const ModelParams& params, double x);

// Left side of the moment identity pi int_0^1 h(x) x^n (1-x)^{2k+1} /
// (2k+p-px) dx by graded quadrature, and its closed-form right side
// n! Gamma(2k) / (Gamma(n+2k) (n+2k+p)).
double moment_integral(const ModelParams& params, int n);
double moment_rhs(const ModelParams& params, int n);

// Index-corrected Beta-sum identity: left side
// sum_j C_p^j (2k-1)/(2k+p-j-1) B(n+j+1, 2k+p-j), right side = moment_rhs.
double beta_sum_identity_lhs(const ModelParams& params, int n);

// (m,n) element of int |phi_z><phi_z| d nu in the {phi_n} basis; angular
// integral analytic, radial by graded quadrature.
cplx resolution_check_transformed(const ModelParams& params, int m, int n);

// Closed-form transformed coherent-state overlap zeta^(1)(z) and the
// coefficient-series route used to cross-check it.
cplx zeta1(const ModelParams& params, cplx zeta, cplx z);
cplx zeta1_series(const ModelParams& params, cplx zeta, cplx z);

}  // namespace dosc::transformed
