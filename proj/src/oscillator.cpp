#include "dosc/oscillator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dosc/specfun.hpp"

namespace dosc::osc {

using specfun::log_gamma;

ModelParams make_params(double b, int p) {
    if (b < 0.0) {
        throw std::domain_error("make_params: b must be >= 0, got " + std::to_string(b));
    }
    if (p < 0) {
        throw std::domain_error("make_params: p must be >= 0");
    }
    ModelParams params;
    params.b = b;
    params.k = 0.5 + 0.25 * std::sqrt(1.0 + 4.0 * b);
    params.p = p;
    params.alpha = -2.0 * (params.k + p);
    return params;
}

double energy(const ModelParams& params, int n) {
    if (n < 0) {
        throw std::domain_error("energy: n must be >= 0");
    }
    return 2.0 * n + 2.0 * params.k;
}

RadialGrid RadialGrid::quadrature(double x_max, int panels, int nodes_per_panel) {
    num::HalfLineSpec spec;
    spec.x_max = x_max;
    spec.panels = panels;
    spec.nodes_per_panel = nodes_per_panel;
    const num::QuadRule rule = num::halfline_rule(spec);
    RadialGrid grid;
    grid.nodes = rule.nodes;
    grid.weights = rule.weights;
    return grid;
}

RadialGrid RadialGrid::uniform_grid(double x_max, int n) {
    if (n < 5) {
        throw std::invalid_argument("RadialGrid::uniform_grid: need >= 5 nodes");
    }
    RadialGrid grid;
    grid.uniform = true;
    grid.spacing = x_max / n;
    grid.nodes.resize(n);
    grid.weights.assign(n, grid.spacing);  // trapezoid-grade, not for precise integrals
    for (int j = 0; j < n; ++j) {
        grid.nodes[j] = (j + 1) * grid.spacing;
    }
    return grid;
}

double reference_x_max(const ModelParams& params, int n_max) {
    return 2.0 * std::sqrt(2.0 * energy(params, n_max)) + 10.0;
}

cplx inner(const StateVector& a, const StateVector& b) {
    if (a.grid != b.grid || a.values.size() != b.values.size()) {
        throw std::invalid_argument("inner: states live on different grids");
    }
    cplx sum = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        sum += a.grid->weights[i] * std::conj(a.values[i]) * b.values[i];
    }
    return sum;
}

double norm_sq(const StateVector& a) { return inner(a, a).real(); }

double potential_v0(const ModelParams& params, double x) {
    return 0.25 * x * x + params.b / (x * x);
}

namespace {

void require_positive_x(double x, const char* who) {
    if (!(x > 0.0)) {
        throw std::domain_error(std::string(who) + ": x must be > 0");
    }
}

// exp of the log prefactor common to psi_n and its derivatives:
// sqrt(n! 2^{1-2k} / Gamma(n+2k)) * x^{2k-1/2} * exp(-x^2/4).
double psi_prefactor(const ModelParams& params, int n, double x) {
    const double k = params.k;
    const double log_norm = 0.5 * (log_gamma(n + 1.0) + (1.0 - 2.0 * k) * std::log(2.0) -
                                   log_gamma(n + 2.0 * k));
    return std::exp(log_norm + (2.0 * k - 0.5) * std::log(x) - 0.25 * x * x);
}

}  // namespace

double psi(const ModelParams& params, int n, double x) {
    require_positive_x(x, "psi");
    if (n < 0) {
        throw std::domain_error("psi: n must be >= 0");
    }
    const double t = 0.5 * x * x;
    return psi_prefactor(params, n, x) * specfun::laguerre(n, 2.0 * params.k - 1.0, t);
}

double psi_prime(const ModelParams& params, int n, double x) {
    require_positive_x(x, "psi_prime");
    const double k = params.k;
    const double a = 2.0 * k - 0.5;
    const double t = 0.5 * x * x;
    const double pref = psi_prefactor(params, n, x);
    const double value = pref * specfun::laguerre(n, 2.0 * k - 1.0, t);
    // d/dx L_n^{2k-1}(x^2/2) = -x L_{n-1}^{2k}(x^2/2)
    return value * (a / x - 0.5 * x) - pref * x * specfun::laguerre(n - 1, 2.0 * k, t);
}

double psi_second(const ModelParams& params, int n, double x) {
    require_positive_x(x, "psi_second");
    const double k = params.k;
    const double a = 2.0 * k - 0.5;
    const double t = 0.5 * x * x;
    const double pref = psi_prefactor(params, n, x);
    const double value = pref * specfun::laguerre(n, 2.0 * k - 1.0, t);
    const double g = a / x - 0.5 * x;
    const double gp = -a / (x * x) - 0.5;
    const double w = -pref * x * specfun::laguerre(n - 1, 2.0 * k, t);
    const double wp = w * ((a + 1.0) / x - 0.5 * x) +
                      pref * x * x * specfun::laguerre(n - 2, 2.0 * k + 1.0, t);
    const double first = value * g + w;
    return first * g + value * gp + wp;
}

StateVector apply_h0(const ModelParams& params, const StateVector& state) {
    const RadialGrid& grid = *state.grid;
    const std::size_t n = state.values.size();
    if (!grid.uniform || n < 5) {
        throw std::invalid_argument("apply_h0: need a uniform grid with >= 5 nodes");
    }
    const double h = grid.spacing;
    const double h2 = 12.0 * h * h;
    StateVector out{state.grid, std::vector<cplx>(n)};
    const auto& v = state.values;
    auto d2 = [&](std::size_t j) -> cplx {
        if (j >= 2 && j + 2 < n) {
            return (-v[j - 2] + 16.0 * v[j - 1] - 30.0 * v[j] + 16.0 * v[j + 1] -
                    v[j + 2]) /
                   h2;
        }
        if (j == 0) {
            return (35.0 * v[0] - 104.0 * v[1] + 114.0 * v[2] - 56.0 * v[3] +
                    11.0 * v[4]) /
                   h2;
        }
        if (j == 1) {
            return (11.0 * v[0] - 20.0 * v[1] + 6.0 * v[2] + 4.0 * v[3] - v[4]) / h2;
        }
        if (j == n - 2) {
            return (11.0 * v[n - 1] - 20.0 * v[n - 2] + 6.0 * v[n - 3] + 4.0 * v[n - 4] -
                    v[n - 5]) /
                   h2;
        }
        return (35.0 * v[n - 1] - 104.0 * v[n - 2] + 114.0 * v[n - 3] -
                56.0 * v[n - 4] + 11.0 * v[n - 5]) /
               h2;
    };
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = -d2(j) + potential_v0(params, grid.nodes[j]) * v[j];
    }
    return out;
}

double coherent_coeff(const ModelParams& params, int n) {
    if (n < 0) {
        throw std::domain_error("coherent_coeff: n must be >= 0");
    }
    const double k = params.k;
    const double log_mag =
        0.5 * (log_gamma(2.0 * k + n) - log_gamma(n + 1.0) - log_gamma(2.0 * k));
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return sign * std::exp(log_mag);
}

namespace {

void require_in_disk(cplx z, const char* who) {
    if (!(std::norm(z) < 1.0)) {
        throw std::domain_error(std::string(who) + ": need |z| < 1");
    }
}

}  // namespace

// With the alternating-sign coefficients a_n, the Laguerre generating
// function at w = -z gives the closed form: prefactor (1+z)^{-2k} and
// Gaussian width q = (1-z)/(4(1+z)).
cplx coherent_psi(const ModelParams& params, cplx z, double x) {
    require_in_disk(z, "coherent_psi");
    require_positive_x(x, "coherent_psi");
    const double k = params.k;
    const double s = std::norm(z);
    const double log_pref = (0.5 - k) * std::log(2.0) - 0.5 * log_gamma(2.0 * k) +
                            k * std::log(1.0 - s) + (2.0 * k - 0.5) * std::log(x);
    const cplx q = 0.25 * (1.0 - z) / (1.0 + z);
    return std::exp(log_pref) * std::exp(-2.0 * k * std::log(1.0 + z) - q * x * x);
}

cplx coherent_psi_prime(const ModelParams& params, cplx z, double x) {
    const double a = 2.0 * params.k - 0.5;
    const cplx q = 0.25 * (1.0 - z) / (1.0 + z);
    return coherent_psi(params, z, x) * (a / x - 2.0 * q * x);
}

cplx coherent_psi_second(const ModelParams& params, cplx z, double x) {
    const double a = 2.0 * params.k - 0.5;
    const cplx q = 0.25 * (1.0 - z) / (1.0 + z);
    const cplx logd = a / x - 2.0 * q * x;
    return coherent_psi(params, z, x) * (logd * logd - a / (x * x) - 2.0 * q);
}

cplx coherent_psi_series(const ModelParams& params, cplx z, double x) {
    require_in_disk(z, "coherent_psi_series");
    const double n0z = std::pow(1.0 - std::norm(z), params.k);
    cplx sum = 0.0;
    cplx zn = 1.0;
    for (int n = 0; n <= 400; ++n) {
        const cplx term = coherent_coeff(params, n) * zn * psi(params, n, x);
        sum += term;
        if (n > 8 && std::abs(term) < 1e-14 * std::fmax(1.0, std::abs(sum))) {
            break;
        }
        zn *= z;
    }
    return n0z * sum;
}

double measure_mu_weight(const ModelParams& params, double s) {
    if (!(s >= 0.0) || s >= 1.0) {
        throw std::domain_error("measure_mu_weight: need 0 <= s < 1");
    }
    const double one_minus = 1.0 - s;
    return (2.0 * params.k - 1.0) / (M_PI * one_minus * one_minus);
}

cplx initial_gram_element(const ModelParams& params, int m, int n) {
    if (m < 0 || n < 0) {
        throw std::domain_error("initial_gram_element: indices must be >= 0");
    }
    if (m != n) {
        return 0.0;  // angular integral of z^m zbar^n
    }
    const double k = params.k;
    const double an_sq =
        std::exp(log_gamma(2.0 * k + n) - log_gamma(n + 1.0) - log_gamma(2.0 * k));
    const double radial = num::rim_integrate([&](double s) {
        return std::pow(s, n) * std::pow(1.0 - s, 2.0 * k - 2.0);
    });
    return an_sq * (2.0 * k - 1.0) * radial;
}

double casimir_value(const ModelParams& params) {
    const double value = 3.0 / 16.0 - params.b / 4.0;
    const double from_k = params.k * (1.0 - params.k);
    if (std::abs(value - from_k) > 1e-14 * std::fmax(1.0, std::abs(value))) {
        throw std::logic_error("casimir_value: 3/16 - b/4 != k(1-k)");
    }
    return value;
}

}  // namespace dosc::osc
