#include "dosc/holomorphic.hpp"

#include <cmath>
#include <stdexcept>

#include "dosc/specfun.hpp"
#include "dosc/transformed.hpp"

namespace dosc::holo {

using specfun::log_gamma;

namespace {

double a_sq(const ModelParams& params, int n) {
    const double k = params.k;
    return std::exp(log_gamma(2.0 * k + n) - log_gamma(n + 1.0) - log_gamma(2.0 * k));
}

double b_sq(const ModelParams& params, int n) {
    return a_sq(params, n) * (n + 2.0 * params.k + params.p) /
           (2.0 * params.k + params.p);
}

void require_kernel_domain(cplx z, cplx w_conj, const char* who) {
    if (!(std::abs(z * w_conj) < 1.0)) {
        throw std::domain_error(std::string(who) + ": need |z wbar| < 1");
    }
}

void check_capacity(std::size_t n, const char* who) {
    if (n > kSeriesCapacity) {
        throw std::length_error(std::string(who) +
                                ": series truncation budget exceeded");
    }
}

}  // namespace

HoloSeries basis_element(const ModelParams& params, System system, int n) {
    if (n < 0) {
        throw std::domain_error("basis_element: n must be >= 0");
    }
    check_capacity(static_cast<std::size_t>(n) + 1, "basis_element");
    HoloSeries series{system, params, std::vector<cplx>(n + 1, 0.0)};
    series.coeffs[n] = (system == System::initial)
                           ? osc::coherent_coeff(params, n)
                           : transformed::b_coeff(params, n);
    return series;
}

cplx eval(const HoloSeries& series, cplx z) {
    cplx sum = 0.0;
    for (std::size_t n = series.coeffs.size(); n-- > 0;) {
        sum = sum * z + series.coeffs[n];
    }
    return sum;
}

cplx bergman0(const ModelParams& params, cplx z, cplx w_conj) {
    require_kernel_domain(z, w_conj, "bergman0");
    return std::exp(-2.0 * params.k * std::log(1.0 - z * w_conj));
}

cplx bergman1(const ModelParams& params, cplx z, cplx w_conj) {
    require_kernel_domain(z, w_conj, "bergman1");
    const double k = params.k;
    const double p = params.p;
    const cplx t = z * w_conj;
    return std::exp(-(2.0 * k + 1.0) * std::log(1.0 - t)) * (2.0 * k + p - p * t) /
           (2.0 * k + p);
}

cplx bergman0_series(const ModelParams& params, cplx z, cplx w_conj, int n_terms) {
    require_kernel_domain(z, w_conj, "bergman0_series");
    const cplx t = z * w_conj;
    cplx sum = 0.0, tn = 1.0;
    for (int n = 0; n < n_terms; ++n) {
        sum += a_sq(params, n) * tn;
        tn *= t;
    }
    return sum;
}

cplx bergman1_series(const ModelParams& params, cplx z, cplx w_conj, int n_terms) {
    require_kernel_domain(z, w_conj, "bergman1_series");
    const cplx t = z * w_conj;
    cplx sum = 0.0, tn = 1.0;
    for (int n = 0; n < n_terms; ++n) {
        sum += b_sq(params, n) * tn;
        tn *= t;
    }
    return sum;
}

HoloSeries apply_op(const HoloSeries& series, InitialOp op) {
    if (series.system != System::initial) {
        throw std::invalid_argument("apply_op: initial-system operator on transformed series");
    }
    const double k = series.params.k;
    const std::size_t n = series.coeffs.size();
    HoloSeries out = series;
    switch (op) {
        case InitialOp::k0:
            for (std::size_t i = 0; i < n; ++i) {
                out.coeffs[i] *= static_cast<double>(i) + k;
            }
            break;
        case InitialOp::kminus:
            for (std::size_t i = 0; i + 1 < n; ++i) {
                out.coeffs[i] = (i + 1.0) * series.coeffs[i + 1];
            }
            if (n > 0) {
                out.coeffs[n - 1] = 0.0;
            }
            break;
        case InitialOp::kplus:
            check_capacity(n + 1, "apply_op(k+)");
            out.coeffs.assign(n + 1, 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                out.coeffs[i + 1] = (static_cast<double>(i) + 2.0 * k) * series.coeffs[i];
            }
            break;
    }
    return out;
}

HoloSeries apply_op(const HoloSeries& series, TransformedOp op) {
    // L maps the initial representation into the transformed one, L+ back;
    // p0, p+- act within the transformed space.
    const System expected_input =
        (op == TransformedOp::L) ? System::initial : System::transformed;
    if (series.system != expected_input) {
        throw std::invalid_argument("apply_op: operator applied in the wrong system");
    }
    const double k = series.params.k;
    const double p = series.params.p;
    const std::size_t n = series.coeffs.size();
    HoloSeries out = series;
    switch (op) {
        case TransformedOp::p0:
            for (std::size_t i = 0; i < n; ++i) {
                out.coeffs[i] *= static_cast<double>(i) + k;
            }
            break;
        case TransformedOp::pminus:
            // p-(z) = 2z d^2/dz^2 + 2(2k+p) d/dz
            for (std::size_t i = 0; i + 1 < n; ++i) {
                out.coeffs[i] =
                    2.0 * (i + 1.0) * (static_cast<double>(i) + 2.0 * k + p) *
                    series.coeffs[i + 1];
            }
            if (n > 0) {
                out.coeffs[n - 1] = 0.0;
            }
            break;
        case TransformedOp::pplus:
            // L(z) k+(z) L+(z): z^n -> 2(n+2k)(n+2k+p+1) z^{n+1}
            check_capacity(n + 1, "apply_op(p+)");
            out.coeffs.assign(n + 1, 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                out.coeffs[i + 1] = 2.0 * (static_cast<double>(i) + 2.0 * k) *
                                    (static_cast<double>(i) + 2.0 * k + p + 1.0) *
                                    series.coeffs[i];
            }
            break;
        case TransformedOp::L:
            out.system = System::transformed;
            for (std::size_t i = 0; i < n; ++i) {
                out.coeffs[i] *= std::sqrt(2.0 / (2.0 * k + p)) *
                                 (static_cast<double>(i) + 2.0 * k + p);
            }
            break;
        case TransformedOp::Ldag:
            out.system = System::initial;
            for (std::size_t i = 0; i < n; ++i) {
                out.coeffs[i] *= std::sqrt(2.0 * (2.0 * k + p));
            }
            break;
    }
    return out;
}

cplx inner_product_coeff(const HoloSeries& lhs, const HoloSeries& rhs) {
    if (lhs.system != rhs.system) {
        throw std::invalid_argument("inner_product_coeff: mixed systems");
    }
    const std::size_t n = std::min(lhs.coeffs.size(), rhs.coeffs.size());
    cplx sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = (lhs.system == System::initial)
                             ? a_sq(lhs.params, static_cast<int>(i))
                             : b_sq(lhs.params, static_cast<int>(i));
        sum += std::conj(lhs.coeffs[i]) * rhs.coeffs[i] / w;
    }
    return sum;
}

cplx inner_product_holo(const HoloSeries& lhs, const HoloSeries& rhs) {
    if (lhs.system != rhs.system) {
        throw std::invalid_argument("inner_product_holo: mixed systems");
    }
    const ModelParams& params = lhs.params;
    const double k = params.k;
    const double p = params.p;
    const int max_degree =
        static_cast<int>(std::max(lhs.coeffs.size(), rhs.coeffs.size()));
    const int angular = std::max(64, 2 * max_degree + 16);
    const double dphi = 2.0 * M_PI / angular;

    // e^{-f} times the measure density, per (1/2) ds dphi.
    auto weight = [&](double s) {
        if (lhs.system == System::initial) {
            return (2.0 * k - 1.0) / M_PI * std::pow(1.0 - s, 2.0 * k - 2.0);
        }
        const double expf1 = std::pow(1.0 - s, 2.0 * k + 1.0) * (2.0 * k + p) /
                             (2.0 * k + p - p * s);
        return expf1 * transformed::measure_h(params, s);
    };

    const num::QuadRule radial = num::rim_rule();
    cplx sum = 0.0;
    for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
        const double s = radial.nodes[i];
        const double r = std::sqrt(s);
        cplx ring = 0.0;
        for (int a = 0; a < angular; ++a) {
            const cplx z = std::polar(r, a * dphi);
            ring += std::conj(eval(lhs, z)) * eval(rhs, z);
        }
        sum += radial.weights[i] * 0.5 * weight(s) * ring * dphi;
    }
    return sum;
}

cplx coherent_overlap_initial(const ModelParams& params, cplx zeta, cplx z) {
    const double t = std::norm(zeta);
    if (!(t < 1.0)) {
        throw std::domain_error("coherent_overlap_initial: need |zeta| < 1");
    }
    if (!(std::abs(zeta * z) < 1.0)) {
        throw std::domain_error("coherent_overlap_initial: need |zeta z| < 1");
    }
    return std::pow(1.0 - t, params.k) *
           std::exp(-2.0 * params.k * std::log(1.0 - zeta * z));
}

}  // namespace dosc::holo
