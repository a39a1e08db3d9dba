#include "dosc/numerics.hpp"

#include <cmath>

namespace dosc::num {

QuadRule gauss_legendre(int n) {
    if (n < 1) {
        throw std::invalid_argument("gauss_legendre: need n >= 1");
    }
    QuadRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) {
                break;
            }
        }
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        rule.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[n - 1 - i] = rule.weights[i];
    }
    return rule;
}

QuadRule gauss_legendre(int n, double a, double b) {
    QuadRule base = gauss_legendre(n);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        base.nodes[i] = mid + half * base.nodes[i];
        base.weights[i] *= half;
    }
    return base;
}

QuadRule halfline_rule(const HalfLineSpec& spec) {
    if (spec.panels < 1 || spec.nodes_per_panel < 1 || !(spec.x_max > 0.0)) {
        throw std::invalid_argument("halfline_rule: bad spec");
    }
    QuadRule rule;
    const QuadRule base = gauss_legendre(spec.nodes_per_panel);
    const double dx = spec.x_max / spec.panels;
    for (int panel = 0; panel < spec.panels; ++panel) {
        const double a = panel * dx;
        const double mid = a + 0.5 * dx;
        const double half = 0.5 * dx;
        for (int i = 0; i < spec.nodes_per_panel; ++i) {
            rule.nodes.push_back(mid + half * base.nodes[i]);
            rule.weights.push_back(half * base.weights[i]);
        }
    }
    return rule;
}

namespace {

double apply_rule(const QuadRule& rule, const std::function<double(double)>& f) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * f(rule.nodes[i]);
    }
    return sum;
}

}  // namespace

double halfline_integrate(const std::function<double(double)>& f,
                          const HalfLineSpec& spec) {
    const double coarse = apply_rule(halfline_rule(spec), f);
    HalfLineSpec fine = spec;
    fine.nodes_per_panel *= 2;
    const double refined = apply_rule(halfline_rule(fine), f);
    const double residual = std::abs(refined - coarse);
    if (residual > spec.tolerance * std::fmax(1.0, std::abs(refined))) {
        throw QuadratureError("halfline_integrate: self-convergence failed, residual " +
                                  std::to_string(residual),
                              residual);
    }
    return refined;
}

QuadRule rim_rule(const RimSpec& spec) {
    if (spec.levels < 1 || spec.nodes_per_panel < 1) {
        throw std::invalid_argument("rim_rule: bad spec");
    }
    QuadRule rule;
    const QuadRule base = gauss_legendre(spec.nodes_per_panel);
    double left = 0.0;
    for (int level = 0; level < spec.levels; ++level) {
        const double right = 1.0 - std::ldexp(1.0, -(level + 1));
        const double mid = 0.5 * (left + right);
        const double half = 0.5 * (right - left);
        for (int i = 0; i < spec.nodes_per_panel; ++i) {
            rule.nodes.push_back(mid + half * base.nodes[i]);
            rule.weights.push_back(half * base.weights[i]);
        }
        left = right;
    }
    return rule;
}

double rim_integrate(const std::function<double(double)>& f, const RimSpec& spec) {
    const double coarse = apply_rule(rim_rule(spec), f);
    RimSpec fine = spec;
    fine.nodes_per_panel *= 2;
    const double refined = apply_rule(rim_rule(fine), f);
    const double residual = std::abs(refined - coarse);
    if (residual > spec.tolerance * std::fmax(1.0, std::abs(refined))) {
        throw QuadratureError("rim_integrate: self-convergence failed, residual " +
                                  std::to_string(residual),
                              residual);
    }
    return refined;
}

cplx disk_integrate(const std::function<cplx(cplx)>& f, const DiskSpec& spec) {
    if (spec.angular_points < 4) {
        throw std::invalid_argument("disk_integrate: need >= 4 angular points");
    }
    const QuadRule radial = rim_rule(spec.radial);
    const int na = spec.angular_points;
    const double dphi = 2.0 * M_PI / na;
    cplx sum = 0.0;
    for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
        const double r = std::sqrt(radial.nodes[i]);
        cplx ring = 0.0;
        for (int a = 0; a < na; ++a) {
            const double phi = a * dphi;
            ring += f(cplx(r * std::cos(phi), r * std::sin(phi)));
        }
        sum += radial.weights[i] * 0.5 * ring * dphi;
    }
    return sum;
}

double stencil_d1(const double* v, double h) {
    return (v[0] - 8.0 * v[1] + 8.0 * v[3] - v[4]) / (12.0 * h);
}

double stencil_d2(const double* v, double h) {
    return (-v[0] + 16.0 * v[1] - 30.0 * v[2] + 16.0 * v[3] - v[4]) / (12.0 * h * h);
}

cplx stencil_d1(const cplx* v, double h) {
    return (v[0] - 8.0 * v[1] + 8.0 * v[3] - v[4]) / (12.0 * h);
}

cplx stencil_d2(const cplx* v, double h) {
    return (-v[0] + 16.0 * v[1] - 30.0 * v[2] + 16.0 * v[3] - v[4]) / (12.0 * h * h);
}

double deriv1(const std::function<double(double)>& f, double s, double h) {
    double v[5];
    for (int i = 0; i < 5; ++i) {
        v[i] = f(s + (i - 2) * h);
    }
    return stencil_d1(v, h);
}

double deriv2(const std::function<double(double)>& f, double s, double h) {
    double v[5];
    for (int i = 0; i < 5; ++i) {
        v[i] = f(s + (i - 2) * h);
    }
    return stencil_d2(v, h);
}

}  // namespace dosc::num
