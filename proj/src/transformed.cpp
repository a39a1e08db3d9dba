#include "dosc/transformed.hpp"

#include <cmath>
#include <stdexcept>

#include "dosc/specfun.hpp"

namespace dosc::transformed {

using specfun::log_gamma;

namespace {

void require_unit_interval(double s, const char* who) {
    if (!(s >= 0.0) || s >= 1.0) {
        throw std::domain_error(std::string(who) + ": need 0 <= s < 1");
    }
}

}  // namespace

double N1z(const ModelParams& params, double s) {
    require_unit_interval(s, "N1z");
    const double denom = 4.0 * params.k + 2.0 * params.p - 2.0 * params.p * s;
    return std::sqrt((1.0 - s) / denom);
}

double b_coeff(const ModelParams& params, int n) {
    const double n0_over_nn =
        std::sqrt((2.0 * params.p + 4.0 * params.k + 2.0 * n) /
                  (4.0 * params.k + 2.0 * params.p));
    return osc::coherent_coeff(params, n) * n0_over_nn;
}

cplx phi_z(const ModelParams& params, cplx z, double x) {
    const darboux::DarbouxContext ctx = darboux::make_context(params);
    const cplx value = osc::coherent_psi(params, z, x);
    const cplx deriv = osc::coherent_psi_prime(params, z, x);
    return N1z(params, std::norm(z)) * darboux::apply_L(ctx, x, value, deriv);
}

cplx phi_z_series(const ModelParams& params, cplx z, double x) {
    const double s = std::norm(z);
    require_unit_interval(s, "phi_z_series");
    const darboux::DarbouxContext ctx = darboux::make_context(params);
    const double n0 = 1.0 / std::sqrt(4.0 * params.k + 2.0 * params.p);
    const double big_n = std::pow(1.0 - s, params.k) * N1z(params, s) / n0;
    cplx sum = 0.0;
    cplx zn = 1.0;
    for (int n = 0; n <= 400; ++n) {
        const cplx term = b_coeff(params, n) * zn * darboux::phi(ctx, n, x);
        sum += term;
        if (n > 8 && std::abs(term) < 1e-14 * std::fmax(1.0, std::abs(sum))) {
            break;
        }
        zn *= z;
    }
    return big_n * sum;
}

double measure_h(const ModelParams& params, double x) {
    if (!(x > 0.0) || !(x < 1.0)) {
        throw std::domain_error("measure_h: need 0 < x < 1");
    }
    const double k = params.k;
    const int p = params.p;
    double sum = 0.0;
    for (int j = 0; j <= p; ++j) {
        sum += static_cast<double>(specfun::binomial(p, j)) * std::pow(x, j) *
               std::pow(1.0 - x, p - j - 2.0) / (2.0 * k + p - j - 1.0);
    }
    return (2.0 * k - 1.0) / M_PI * (2.0 * k + p - p * x) * sum;
}

double moment_integral(const ModelParams& params, int n) {
    const double k = params.k;
    const int p = params.p;
    return M_PI * num::rim_integrate([&](double x) {
        return measure_h(params, x) * std::pow(x, n) *
               std::pow(1.0 - x, 2.0 * k + 1.0) / (2.0 * k + p - p * x);
    });
}

double moment_rhs(const ModelParams& params, int n) {
    const double k = params.k;
    return std::exp(log_gamma(n + 1.0) + log_gamma(2.0 * k) - log_gamma(n + 2.0 * k)) /
           (n + 2.0 * k + params.p);
}

double beta_sum_identity_lhs(const ModelParams& params, int n) {
    const double k = params.k;
    const int p = params.p;
    double sum = 0.0;
    for (int j = 0; j <= p; ++j) {
        sum += static_cast<double>(specfun::binomial(p, j)) * (2.0 * k - 1.0) /
               (2.0 * k + p - j - 1.0) *
               specfun::beta(n + j + 1.0, 2.0 * k + p - j);
    }
    return sum;
}

cplx resolution_check_transformed(const ModelParams& params, int m, int n) {
    if (m < 0 || n < 0) {
        throw std::domain_error("resolution_check_transformed: indices must be >= 0");
    }
    if (m != n) {
        return 0.0;  // angular integral of z^m zbar^n
    }
    const double bn = b_coeff(params, n);
    return bn * bn * (2.0 * params.k + params.p) * moment_integral(params, n);
}

cplx zeta1(const ModelParams& params, cplx zeta, cplx z) {
    const double t = std::norm(zeta);
    require_unit_interval(t, "zeta1");
    const double k = params.k;
    const double p = params.p;
    const cplx zz = zeta * z;
    if (!(std::abs(zz) < 1.0)) {
        throw std::domain_error("zeta1: need |zeta z| < 1");
    }
    const cplx numerator = 2.0 * k + p - p * zz;
    const cplx pole = std::exp(-(2.0 * k + 1.0) * std::log(1.0 - zz));
    return numerator / std::sqrt(2.0 * k + p) * std::pow(1.0 - t, k + 0.5) * pole /
           std::sqrt(2.0 * k + p - p * t);
}

cplx zeta1_series(const ModelParams& params, cplx zeta, cplx z) {
    const double t = std::norm(zeta);
    require_unit_interval(t, "zeta1_series");
    const double k = params.k;
    const double p = params.p;
    const double pref = std::pow(1.0 - t, k + 0.5) *
                        std::sqrt((2.0 * k + p) / (2.0 * k + p - p * t));
    cplx sum = 0.0;
    cplx tn = 1.0;
    const cplx zz = zeta * z;
    for (int n = 0; n <= 400; ++n) {
        const double bn = b_coeff(params, n);
        const cplx term = bn * bn * tn;
        sum += term;
        if (n > 8 && std::abs(term) < 1e-15 * std::fmax(1.0, std::abs(sum))) {
            break;
        }
        tn *= zz;
    }
    return pref * sum;
}

}  // namespace dosc::transformed
