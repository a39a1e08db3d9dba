#include "dosc/darboux.hpp"

#include <cmath>
#include <stdexcept>

#include "dosc/specfun.hpp"

namespace dosc::darboux {

using specfun::laguerre;

DarbouxContext make_context(const ModelParams& params) { return DarbouxContext{params}; }

namespace {

void require_positive_x(double x, const char* who) {
    if (!(x > 0.0)) {
        throw std::domain_error(std::string(who) + ": x must be > 0");
    }
}

}  // namespace

double u_p(const DarbouxContext& ctx, double x) {
    require_positive_x(x, "u_p");
    const double k = ctx.params.k;
    const double y = -0.5 * x * x;
    const double lag = laguerre(ctx.params.p, 2.0 * k - 1.0, y);
    if (lag == 0.0) {
        throw std::logic_error("u_p: Laguerre factor vanished; u must be nodeless");
    }
    return std::pow(x, 2.0 * k - 0.5) * lag * std::exp(0.25 * x * x);
}

double L0(const DarbouxContext& ctx, double x) {
    require_positive_x(x, "L0");
    const double k = ctx.params.k;
    const int p = ctx.params.p;
    const double y = -0.5 * x * x;
    double ratio = 0.0;
    if (p >= 1) {
        ratio = laguerre(p - 1, 2.0 * k, y) / laguerre(p, 2.0 * k - 1.0, y);
    }
    return (4.0 * k - 1.0) / (2.0 * x) + 0.5 * x + x * ratio;
}

double L0_prime(const DarbouxContext& ctx, double x) {
    return -0.5 * A_p(ctx, x);
}

double A_p(const DarbouxContext& ctx, double x) {
    require_positive_x(x, "A_p");
    const double k = ctx.params.k;
    const int p = ctx.params.p;
    const double y = -0.5 * x * x;
    const double lp = laguerre(p, 2.0 * k - 1.0, y);
    const double lp1 = laguerre(p - 1, 2.0 * k, y);
    const double lp2 = laguerre(p - 2, 2.0 * k + 1.0, y);
    const double ratio = lp1 / lp;
    return -1.0 + (4.0 * k - 1.0) / (x * x) - 2.0 * (x * x * lp2 + lp1) / lp +
           2.0 * x * x * ratio * ratio;
}

double V_p(const DarbouxContext& ctx, double x) {
    return osc::potential_v0(ctx.params, x) + A_p(ctx, x);
}

double norm_const(const DarbouxContext& ctx, int n) {
    if (n < 0) {
        throw std::domain_error("norm_const: n must be >= 0");
    }
    return 1.0 / std::sqrt(2.0 * ctx.params.p + 4.0 * ctx.params.k + 2.0 * n);
}

double phi(const DarbouxContext& ctx, int n, double x) {
    const double value = osc::psi(ctx.params, n, x);
    const double deriv = osc::psi_prime(ctx.params, n, x);
    return norm_const(ctx, n) * apply_L(ctx, x, value, deriv);
}

double phi_prime(const DarbouxContext& ctx, int n, double x) {
    const double value = osc::psi(ctx.params, n, x);
    const double deriv = osc::psi_prime(ctx.params, n, x);
    const double second = osc::psi_second(ctx.params, n, x);
    return norm_const(ctx, n) *
           (-L0_prime(ctx, x) * value - L0(ctx, x) * deriv + second);
}

StateVector apply_h1(const DarbouxContext& ctx, const StateVector& state) {
    StateVector out = osc::apply_h0(ctx.params, state);
    for (std::size_t j = 0; j < out.values.size(); ++j) {
        out.values[j] += A_p(ctx, state.grid->nodes[j]) * state.values[j];
    }
    return out;
}

double intertwining_residual(const DarbouxContext& ctx,
                             const std::function<double(double)>& f,
                             const std::function<double(double)>& f_prime,
                             const RadialGrid& grid, double x_lo, double x_hi) {
    if (!grid.uniform || grid.nodes.size() < 9) {
        throw std::invalid_argument("intertwining_residual: need a uniform grid");
    }
    const std::size_t n = grid.nodes.size();
    const double h = grid.spacing;
    StateVector fv{&grid, std::vector<cplx>(n)};
    StateVector lv{&grid, std::vector<cplx>(n)};
    for (std::size_t j = 0; j < n; ++j) {
        const double x = grid.nodes[j];
        fv.values[j] = f(x);
        lv.values[j] = apply_L(ctx, x, f(x), f_prime(x));
    }
    const StateVector h0f = osc::apply_h0(ctx.params, fv);   // stencil route
    const StateVector h1lf = apply_h1(ctx, lv);              // stencil route
    double worst = 0.0;
    for (std::size_t j = 4; j + 4 < n; ++j) {
        const double x = grid.nodes[j];
        if (x < x_lo || x > x_hi) {
            continue;
        }
        // (h0 f)' by 5-point stencil of the stencil values
        const cplx d1 = (h0f.values[j - 2] - 8.0 * h0f.values[j - 1] +
                         8.0 * h0f.values[j + 1] - h0f.values[j + 2]) /
                        (12.0 * h);
        const cplx lh0f = -L0(ctx, x) * h0f.values[j] + d1;
        worst = std::fmax(worst, std::abs(lh0f - h1lf.values[j]));
    }
    return worst;
}

std::pair<double, double> ladder_matrix_elements(const DarbouxContext& ctx, int n) {
    if (n < 0) {
        throw std::domain_error("ladder_matrix_elements: n must be >= 0");
    }
    const double k = ctx.params.k;
    const double alpha = ctx.params.alpha;
    auto gap = [&](int m) { return osc::energy(ctx.params, m) - alpha; };
    const double raise =
        -std::sqrt(gap(n) * gap(n + 1) * (n + 1.0) * (n + 2.0 * k));
    const double lower =
        (n == 0) ? 0.0
                 : -std::sqrt(gap(n) * gap(n - 1) * n * (n + 2.0 * k - 1.0));
    return {raise, lower};
}

std::pair<double, double> nonlinear_commutator_check(const DarbouxContext& ctx, int n) {
    const double k = ctx.params.k;
    const double alpha = ctx.params.alpha;
    auto gap = [&](int m) { return osc::energy(ctx.params, m) - alpha; };
    double lhs = gap(n) * gap(n + 1) * (n + 1.0) * (n + 2.0 * k);
    if (n >= 1) {
        lhs -= gap(n) * gap(n - 1) * n * (n + 2.0 * k - 1.0);
    }
    const double p0 = k + n;
    const double rhs = 2.0 * (2.0 * k * (1.0 - k) - p0 * alpha + 4.0 * p0 * p0) *
                       (2.0 * p0 - alpha);
    return {lhs, rhs};
}

}  // namespace dosc::darboux
