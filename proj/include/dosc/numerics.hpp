#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace dosc::num {

using cplx = std::complex<double>;

// Shared tolerance ladder: coarse identity checks, inner products,
// special-function identities.
inline constexpr double tol_check = 1e-6;
inline constexpr double tol_inner = 1e-8;
inline constexpr double tol_special = 1e-10;

struct QuadratureError : std::runtime_error {
    double residual;
    QuadratureError(const std::string& what, double res)
        : std::runtime_error(what), residual(res) {}
};

struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss-Legendre rule on [-1,1] (Newton iteration on Legendre roots).
QuadRule gauss_legendre(int n);
// Same rule mapped to [a,b].
QuadRule gauss_legendre(int n, double a, double b);

struct HalfLineSpec {
    double x_max = 30.0;
    int panels = 40;
    int nodes_per_panel = 24;
    double tolerance = 1e-12;
};

// Composite rule over (0, x_max].
QuadRule halfline_rule(const HalfLineSpec& spec);

// Integral over [0, infinity) of a fast-decaying integrand. Self-convergence:
// the node count is doubled once and the refined value is accepted only if the
// two evaluations agree within spec.tolerance (the tail beyond x_max must be
// negligible at the integrand's decay rate).
double halfline_integrate(const std::function<double(double)>& f,
                          const HalfLineSpec& spec = {});

struct RimSpec {
    int levels = 48;  // dyadic panels toward s = 1
    int nodes_per_panel = 24;
    // Self-convergence gate. Looser than the half-line gate: for endpoint
    // exponents near -1/2 (the k = 3/4 worst case) the node-doubling
    // difference sits at a few 1e-12 and the truncated dyadic tail
    // contributes up to ~1.2e-7 absolute, which every consumer's tolerance
    // absorbs.
    double tolerance = 1e-10;
};

// Composite rule over [0, 1) with panels graded geometrically toward the rim:
// [0,1/2], [1/2,3/4], ..., down to 1 - 2^-levels. Handles integrable
// (1-s)^beta endpoint singularities with beta > -1.
QuadRule rim_rule(const RimSpec& spec = {});

double rim_integrate(const std::function<double(double)>& f,
                     const RimSpec& spec = {});

struct DiskSpec {
    RimSpec radial;
    int angular_points = 64;
};

// Integral over the unit disk, area element, in polar form
// s = |z|^2: dA = (1/2) ds dphi. The angular trapezoid rule is spectrally
// exact for trigonometric polynomials, so polynomial pairings are exact once
// angular_points exceeds the bandwidth.
cplx disk_integrate(const std::function<cplx(cplx)>& f, const DiskSpec& spec = {});

// 5-point central stencils on a uniform window v[0..4], center v[2]. O(h^4).
double stencil_d1(const double* v, double h);
double stencil_d2(const double* v, double h);
cplx stencil_d1(const cplx* v, double h);
cplx stencil_d2(const cplx* v, double h);

// First/second s-derivative of a scalar map by 5-point stencil, step shrunk
// near s = 1 so the window never crosses the rim.
double deriv1(const std::function<double(double)>& f, double s, double h);
double deriv2(const std::function<double(double)>& f, double s, double h);

}  // namespace dosc::num
