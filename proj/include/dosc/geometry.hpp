#pragma once

#include "dosc/holomorphic.hpp"

namespace dosc::geom {

using holo::System;
using num::cplx;
using osc::ModelParams;

// Kahler potentials and metrics as functions of s = |z|^2.
double f0(const ModelParams& params, double s);
double f1(const ModelParams& params, double s);
double g0(const ModelParams& params, double s);
double g1(const ModelParams& params, double s);
double metric(const ModelParams& params, System system, double s);

// F' + s F'' of a radial map by 5-point stencil, step shrunk near the rim.
// This is d^2/dz dzbar of F(|z|^2).
double radial_laplacian(const std::function<double(double)>& F, double s);

// Gauss curvature -(2/g) d^2/dz dzbar ln g, stencil route (no closed form is
// used for the transformed system).
double curvature(const ModelParams& params, System system, cplx z);

/// Classical observable with analytic complex derivatives.
struct Observable {
    std::function<cplx(cplx)> value;
    std::function<cplx(cplx)> d_z;
    std::function<cplx(cplx)> d_zbar;
};

// Observable of the form z^a zbar^c R(|z|^2); R' by 5-point stencil.
Observable radial_observable(int a, int c, std::function<double(double)> radial);

// {F,G} = (i/g)(dzbar F dz G - dz F dzbar G); the sign reproduces the
// printed dynamics zdot = {z, K0} = -iz.
cplx poisson(const ModelParams& params, System system, const Observable& F,
             const Observable& G, cplx z);

enum class Symbol { K0, Kplus, Kminus, H1, P0, Pplus, Pminus };

Observable symbol_observable(const ModelParams& params, Symbol which);
cplx symbol_value(const ModelParams& params, Symbol which, cplx z);

// Quantum coefficient-series route for the ladder symbols <phi_zbar|p+-|phi_zbar>;
// used to cross-check the closed forms.
cplx ladder_symbol_series(const ModelParams& params, bool raising, cplx z);

struct TrajectoryPoint {
    double time;
    cplx z;
};

// RK4 integration of zdot = {z, H} with H = K0 (initial) or P0 (transformed).
// Throws if |z| drifts by more than drift_tol per step.
std::vector<TrajectoryPoint> hamilton_flow(const ModelParams& params, System system,
                                           cplx z0, double t_end, double dt,
                                           double drift_tol = 1e-9);

}  // namespace dosc::geom
