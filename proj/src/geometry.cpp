#include "dosc/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "dosc/darboux.hpp"
#include "dosc/transformed.hpp"

namespace dosc::geom {

namespace {

void require_unit_interval(double s, const char* who) {
    if (!(s >= 0.0) || s >= 1.0) {
        throw std::domain_error(std::string(who) + ": need 0 <= s < 1");
    }
}

cplx int_pow(cplx z, int n) {
    cplx out = 1.0;
    for (int i = 0; i < n; ++i) {
        out *= z;
    }
    return out;
}

}  // namespace

double f0(const ModelParams& params, double s) {
    require_unit_interval(s, "f0");
    return -2.0 * params.k * std::log(1.0 - s);
}

double f1(const ModelParams& params, double s) {
    require_unit_interval(s, "f1");
    const double k = params.k;
    const double p = params.p;
    return f0(params, s) +
           std::log((2.0 * k + p - p * s) / ((2.0 * k + p) * (1.0 - s)));
}

double g0(const ModelParams& params, double s) {
    require_unit_interval(s, "g0");
    const double d = 1.0 - s;
    return 2.0 * params.k / (d * d);
}

double g1(const ModelParams& params, double s) {
    require_unit_interval(s, "g1");
    const double k = params.k;
    const double p = params.p;
    const double d = 1.0 - s;
    const double e = 2.0 * k + p - p * s;
    return (2.0 * k + 1.0) / (d * d) - p * (2.0 * k + p) / (e * e);
}

double metric(const ModelParams& params, System system, double s) {
    return system == System::initial ? g0(params, s) : g1(params, s);
}

double radial_laplacian(const std::function<double(double)>& F, double s) {
    const double h = std::fmin(1e-4, (1.0 - s) / 10.0);
    return num::deriv1(F, s, h) + s * num::deriv2(F, s, h);
}

double curvature(const ModelParams& params, System system, cplx z) {
    const double s = std::norm(z);
    require_unit_interval(s, "curvature");
    auto log_metric = [&](double t) { return std::log(metric(params, system, t)); };
    return -2.0 / metric(params, system, s) * radial_laplacian(log_metric, s);
}

Observable radial_observable(int a, int c, std::function<double(double)> radial) {
    if (a < 0 || c < 0) {
        throw std::invalid_argument("radial_observable: powers must be >= 0");
    }
    auto rprime = [radial](double s) {
        const double h = std::fmin(1e-5, (1.0 - s) / 20.0);
        return num::deriv1(radial, s, h);
    };
    Observable obs;
    obs.value = [a, c, radial](cplx z) {
        return int_pow(z, a) * int_pow(std::conj(z), c) * radial(std::norm(z));
    };
    obs.d_z = [a, c, radial, rprime](cplx z) {
        const double s = std::norm(z);
        cplx out = int_pow(z, a) * int_pow(std::conj(z), c + 1) * rprime(s);
        if (a > 0) {
            out += static_cast<double>(a) * int_pow(z, a - 1) *
                   int_pow(std::conj(z), c) * radial(s);
        }
        return out;
    };
    obs.d_zbar = [a, c, radial, rprime](cplx z) {
        const double s = std::norm(z);
        cplx out = int_pow(z, a + 1) * int_pow(std::conj(z), c) * rprime(s);
        if (c > 0) {
            out += static_cast<double>(c) * int_pow(z, a) *
                   int_pow(std::conj(z), c - 1) * radial(s);
        }
        return out;
    };
    return obs;
}

cplx poisson(const ModelParams& params, System system, const Observable& F,
             const Observable& G, cplx z) {
    const double s = std::norm(z);
    require_unit_interval(s, "poisson");
    const cplx i(0.0, 1.0);
    return i / metric(params, system, s) *
           (F.d_zbar(z) * G.d_z(z) - F.d_z(z) * G.d_zbar(z));
}

Observable symbol_observable(const ModelParams& params, Symbol which) {
    const double k = params.k;
    const double p = params.p;
    switch (which) {
        case Symbol::K0:
            return radial_observable(0, 0,
                                     [k](double s) { return k * (1.0 + s) / (1.0 - s); });
        case Symbol::Kplus:
            return radial_observable(1, 0,
                                     [k](double s) { return 2.0 * k / (1.0 - s); });
        case Symbol::Kminus:
            return radial_observable(0, 1,
                                     [k](double s) { return 2.0 * k / (1.0 - s); });
        case Symbol::H1:
            return radial_observable(0, 0, [k, p](double s) {
                return 2.0 * k + 4.0 * k * s * (2.0 * k + p + 1.0 - p * s) /
                                     ((1.0 - s) * (2.0 * k + p - p * s));
            });
        case Symbol::P0:
            return radial_observable(0, 0, [k, p](double s) {
                return k + 2.0 * k * s * (2.0 * k + p + 1.0 - p * s) /
                               ((1.0 - s) * (2.0 * k + p - p * s));
            });
        case Symbol::Pplus:
        case Symbol::Pminus: {
            auto profile = [k, p](double s) {
                const double d = 1.0 - s;
                const double bracket =
                    2.0 * (2.0 * k + 1.0) * (2.0 * k + p + 1.0) * s * d +
                    (2.0 * k + 1.0) * (2.0 * k + 2.0) * s * s +
                    (2.0 * k + p) * (2.0 * k + p + 1.0) * d * d;
                return 4.0 * k * bracket / ((2.0 * k + p - p * s) * d * d);
            };
            return which == Symbol::Pplus ? radial_observable(1, 0, profile)
                                          : radial_observable(0, 1, profile);
        }
    }
    throw std::logic_error("symbol_observable: unreachable");
}

cplx symbol_value(const ModelParams& params, Symbol which, cplx z) {
    const double s = std::norm(z);
    require_unit_interval(s, "symbol_value");
    return symbol_observable(params, which).value(z);
}

cplx ladder_symbol_series(const ModelParams& params, bool raising, cplx z) {
    const double s = std::norm(z);
    require_unit_interval(s, "ladder_symbol_series");
    const double k = params.k;
    const double p = params.p;
    const darboux::DarbouxContext ctx = darboux::make_context(params);
    const double n_sq =
        std::pow(1.0 - s, 2.0 * k + 1.0) * (2.0 * k + p) / (2.0 * k + p - p * s);
    cplx sum = 0.0;
    double sn = 1.0;  // s^n for raising, s^{n-1} for lowering
    for (int n = 0; n <= 400; ++n) {
        const auto [raise, lower] = darboux::ladder_matrix_elements(ctx, n);
        cplx term;
        if (raising) {
            // <phi_{n+1}| p+ |phi_n> pairs zbar^{n+1} z^n -> z s^n (w = zbar)
            term = transformed::b_coeff(params, n) *
                   transformed::b_coeff(params, n + 1) * raise * z * sn;
            sum += term;
            sn *= s;
        } else {
            // <phi_{n-1}| p- |phi_n> pairs zbar^{n-1} z^n -> zbar s^{n-1}
            if (n == 0) {
                continue;
            }
            term = transformed::b_coeff(params, n) *
                   transformed::b_coeff(params, n - 1) * lower * std::conj(z) * sn;
            sum += term;
            sn *= s;
        }
        if (n > 8 && std::abs(term) < 1e-14 * std::fmax(1.0, std::abs(sum))) {
            break;
        }
    }
    return n_sq * sum;
}

std::vector<TrajectoryPoint> hamilton_flow(const ModelParams& params, System system,
                                           cplx z0, double t_end, double dt,
                                           double drift_tol) {
    if (!(std::norm(z0) < 1.0)) {
        throw std::domain_error("hamilton_flow: need |z0| < 1");
    }
    if (!(dt > 0.0) || !(t_end >= 0.0)) {
        throw std::invalid_argument("hamilton_flow: need dt > 0 and t_end >= 0");
    }
    const Observable hamiltonian = symbol_observable(
        params, system == System::initial ? Symbol::K0 : Symbol::P0);
    Observable coordinate;
    coordinate.value = [](cplx z) { return z; };
    coordinate.d_z = [](cplx) { return cplx(1.0); };
    coordinate.d_zbar = [](cplx) { return cplx(0.0); };

    auto rhs = [&](cplx z) {
        return poisson(params, system, coordinate, hamiltonian, z);
    };

    std::vector<TrajectoryPoint> trajectory;
    trajectory.push_back({0.0, z0});
    cplx z = z0;
    double t = 0.0;
    while (t < t_end - 1e-15 * std::fmax(1.0, t_end)) {
        const double step = std::fmin(dt, t_end - t);
        const cplx k1 = rhs(z);
        const cplx k2 = rhs(z + 0.5 * step * k1);
        const cplx k3 = rhs(z + 0.5 * step * k2);
        const cplx k4 = rhs(z + step * k3);
        const cplx znew = z + step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (std::abs(std::abs(znew) - std::abs(z)) > drift_tol) {
            throw std::runtime_error("hamilton_flow: modulus drift exceeded tolerance");
        }
        z = znew;
        t += step;
        trajectory.push_back({t, z});
    }
    return trajectory;
}

}  // namespace dosc::geom
