#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "dosc/geometry.hpp"

using namespace dosc::geom;
using dosc::num::cplx;
using dosc::osc::ModelParams;
using dosc::osc::make_params;

namespace {

std::vector<cplx> disk_points(int count, double radius, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<cplx> points;
    points.reserve(count);
    while (static_cast<int>(points.size()) < count) {
        const cplx z(radius * (2.0 * unif(rng) - 1.0),
                     radius * (2.0 * unif(rng) - 1.0));
        if (std::abs(z) < radius && std::abs(z) > 0.05) {
            points.push_back(z);
        }
    }
    return points;
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("Kahler potentials") {
    const ModelParams params = make_params(2.0, 1);
    CHECK(f0(params, 0.0) == 0.0);
    CHECK(f1(params, 0.0) == doctest::Approx(0.0).epsilon(1e-15));
    // f0 closed form
    CHECK(f0(params, 0.5) ==
          doctest::Approx(-2.0 * params.k * std::log(0.5)).epsilon(1e-14));
    // p = 0 reduction: f1 = -(2k+1) ln(1-s)
    const ModelParams p0 = make_params(2.0, 0);
    for (double s : {0.2, 0.7, 0.95}) {
        CHECK(f1(p0, s) ==
              doctest::Approx(-(2.0 * p0.k + 1.0) * std::log(1.0 - s)).epsilon(1e-13));
    }
    // f1 - f0 diverges like -ln(1-s) toward the rim
    const double s_near = 1.0 - 1e-6;
    const double diff = f1(params, s_near) - f0(params, s_near);
    CHECK(diff / (-std::log(1.0 - s_near)) == doctest::Approx(1.0).epsilon(5e-2));
    CHECK_THROWS_AS(f0(params, 1.0), std::domain_error);
    CHECK_THROWS_AS(f1(params, 1.0), std::domain_error);
}

TEST_CASE("metrics: closed forms and the potential route") {
    const ModelParams params = make_params(2.0, 1);
    const double k = params.k;
    const double p = params.p;
    CHECK(g0(params, 0.0) == doctest::Approx(2.0 * k).epsilon(1e-15));
    CHECK(g1(params, 0.0) ==
          doctest::Approx(2.0 * k + 1.0 - p / (2.0 * k + p)).epsilon(1e-14));
    // p = 0 reduction
    const ModelParams pz = make_params(2.0, 0);
    for (double s : {0.1, 0.6, 0.9}) {
        CHECK(g1(pz, s) ==
              doctest::Approx((2.0 * pz.k + 1.0) / ((1.0 - s) * (1.0 - s)))
                  .epsilon(1e-13));
    }
    // positivity and g = F' + s F'' for both systems
    for (double s = 0.05; s < 0.995; s += 0.05) {
        CHECK(g0(params, s) > 0.0);
        CHECK(g1(params, s) > 0.0);
        const double from_f0 =
            radial_laplacian([&](double t) { return f0(params, t); }, s);
        CHECK(std::fabs(from_f0 - g0(params, s)) <
              1e-8 * std::fmax(1.0, g0(params, s)));
        const double from_f1 =
            radial_laplacian([&](double t) { return f1(params, t); }, s);
        CHECK(std::fabs(from_f1 - g1(params, s)) <
              1e-8 * std::fmax(1.0, g1(params, s)));
    }
    CHECK(metric(params, System::initial, 0.3) == g0(params, 0.3));
    CHECK(metric(params, System::transformed, 0.3) == g1(params, 0.3));
}

TEST_CASE("curvature") {
    const ModelParams params = make_params(2.0, 1);
    for (const cplx z : {cplx(0.1, 0.0), cplx(0.4, 0.3), cplx(0.0, 0.8)}) {
        CHECK(std::fabs(curvature(params, System::initial, z) + 2.0 / params.k) < 1e-6);
    }
    // p = 0 transformed curvature is the constant of the shifted system
    const ModelParams pz = make_params(2.0, 0);
    for (const cplx z : {cplx(0.2, 0.1), cplx(0.6, -0.4)}) {
        CHECK(std::fabs(curvature(pz, System::transformed, z) +
                        2.0 / (pz.k + 0.5)) < 1e-6);
    }
    // flat limit k -> infinity
    const ModelParams big = make_params(1e4, 1);
    CHECK(std::fabs(curvature(big, System::transformed, cplx(0.5, 0.0))) < 0.05);
    CHECK_THROWS_AS(curvature(params, System::initial, cplx(1.0, 0.2)),
                    std::domain_error);
}

TEST_CASE("symbols at distinguished points") {
    const ModelParams params = make_params(2.0, 1);
    CHECK(std::abs(symbol_value(params, Symbol::K0, 0.0) - params.k) < 1e-15);
    CHECK(std::abs(symbol_value(params, Symbol::H1, 0.0) - 2.0 * params.k) < 1e-15);
    for (const cplx z : disk_points(8, 0.85, 7)) {
        // H1 = 2 P0 and P+ = conj(P-)
        CHECK(std::abs(symbol_value(params, Symbol::H1, z) -
                       2.0 * symbol_value(params, Symbol::P0, z)) < 1e-12);
        CHECK(std::abs(symbol_value(params, Symbol::Pplus, z) -
                       std::conj(symbol_value(params, Symbol::Pminus, z))) < 1e-12);
        CHECK(std::abs(symbol_value(params, Symbol::Kplus, z) -
                       std::conj(symbol_value(params, Symbol::Kminus, z))) < 1e-12);
    }
    // K0 closed form k(1+s)/(1-s)
    const cplx z(0.5, 0.2);
    const double s = std::norm(z);
    CHECK(std::abs(symbol_value(params, Symbol::K0, z) -
                   params.k * (1.0 + s) / (1.0 - s)) < 1e-13);
}

TEST_CASE("ladder symbols: quantum series route") {
    for (double b : {0.0, 2.0}) {
        for (int p : {0, 1, 3}) {
            const ModelParams params = make_params(b, p);
            for (const cplx z : disk_points(5, 0.8, 21)) {
                CHECK(std::abs(symbol_value(params, Symbol::Pplus, z) -
                               ladder_symbol_series(params, true, z)) < 1e-8);
                CHECK(std::abs(symbol_value(params, Symbol::Pminus, z) -
                               ladder_symbol_series(params, false, z)) < 1e-8);
            }
        }
    }
}

TEST_CASE("Poisson bracket: dynamics, algebra, structure") {
    const ModelParams params = make_params(2.0, 1);
    const Observable obs_z{[](cplx z) { return z; }, [](cplx) { return cplx(1.0); },
                           [](cplx) { return cplx(0.0); }};
    const Observable k0 = symbol_observable(params, Symbol::K0);
    const Observable kp = symbol_observable(params, Symbol::Kplus);
    const Observable km = symbol_observable(params, Symbol::Kminus);
    for (const cplx z : disk_points(20, 0.8, 12345)) {
        // printed dynamics zdot = {z, K0} = -iz
        CHECK(std::abs(poisson(params, System::initial, obs_z, k0, z) -
                       cplx(0.0, -1.0) * z) < 1e-8);
        // antisymmetry, trivial diagonal
        CHECK(std::abs(poisson(params, System::initial, k0, k0, z)) < 1e-12);
        // su(1,1): {K-, K+} = 2i K0, {K0, K+-} = +-i K+-
        const cplx k0v = symbol_value(params, Symbol::K0, z);
        CHECK(std::abs(poisson(params, System::initial, km, kp, z) -
                       cplx(0.0, 2.0) * k0v) < 1e-7);
        CHECK(std::abs(poisson(params, System::initial, k0, kp, z) -
                       cplx(0.0, 1.0) * symbol_value(params, Symbol::Kplus, z)) < 1e-7);
        CHECK(std::abs(poisson(params, System::initial, k0, km, z) +
                       cplx(0.0, 1.0) * symbol_value(params, Symbol::Kminus, z)) < 1e-7);
    }
    // transformed relations {P0, P+-} = +-i P+-
    const Observable p0 = symbol_observable(params, Symbol::P0);
    const Observable pp = symbol_observable(params, Symbol::Pplus);
    const Observable pm = symbol_observable(params, Symbol::Pminus);
    for (const cplx z : disk_points(20, 0.8, 777)) {
        CHECK(std::abs(poisson(params, System::transformed, p0, pp, z) -
                       cplx(0.0, 1.0) * symbol_value(params, Symbol::Pplus, z)) < 1e-7);
        CHECK(std::abs(poisson(params, System::transformed, p0, pm, z) +
                       cplx(0.0, 1.0) * symbol_value(params, Symbol::Pminus, z)) < 1e-7);
    }
    // antisymmetry and Leibniz rule on polynomial observables
    const Observable F{[](cplx z) { return z * z * std::conj(z); },
                       [](cplx z) { return 2.0 * z * std::conj(z); },
                       [](cplx z) { return z * z; }};
    const Observable G{[](cplx z) { return z + std::conj(z) * std::conj(z); },
                       [](cplx) { return cplx(1.0); },
                       [](cplx z) { return 2.0 * std::conj(z); }};
    const Observable H{[](cplx z) { return std::conj(z) * z * z * z; },
                       [](cplx z) { return 3.0 * z * z * std::conj(z); },
                       [](cplx z) { return z * z * z; }};
    const Observable FG{
        [&](cplx z) { return F.value(z) * G.value(z); },
        [&](cplx z) { return F.d_z(z) * G.value(z) + F.value(z) * G.d_z(z); },
        [&](cplx z) { return F.d_zbar(z) * G.value(z) + F.value(z) * G.d_zbar(z); }};
    for (const cplx z : disk_points(20, 0.8, 99)) {
        const cplx fg = poisson(params, System::initial, F, G, z);
        const cplx gf = poisson(params, System::initial, G, F, z);
        CHECK(std::abs(fg + gf) < 1e-8);
        const cplx lhs = poisson(params, System::initial, FG, H, z);
        const cplx rhs = F.value(z) * poisson(params, System::initial, G, H, z) +
                         poisson(params, System::initial, F, H, z) * G.value(z);
        CHECK(std::abs(lhs - rhs) < 1e-8 * std::fmax(1.0, std::abs(rhs)));
    }
    CHECK_THROWS_AS(poisson(params, System::initial, k0, kp, cplx(1.0, 0.3)),
                    std::domain_error);
}

TEST_CASE("Hamiltonian flow") {
    const ModelParams params = make_params(2.0, 1);
    const cplx z0(0.5, 0.0);
    const double t_end = 2.0 * M_PI;
    const double dt = 1e-3;
    const auto initial = hamilton_flow(params, System::initial, z0, t_end, dt);
    const auto transformed = hamilton_flow(params, System::transformed, z0, t_end, dt);
    REQUIRE(initial.size() == transformed.size());
    // period-2pi return and modulus conservation (exact flow z0 e^{-it})
    CHECK(std::abs(initial.back().z - z0) < 1e-8);
    CHECK(std::abs(transformed.back().z - z0) < 1e-8);
    double worst_drift = 0.0, worst_gap = 0.0, worst_energy = 0.0;
    const double e0 = symbol_value(params, Symbol::K0, z0).real();
    for (std::size_t i = 0; i < initial.size(); ++i) {
        worst_drift = std::fmax(worst_drift,
                                std::fabs(std::abs(initial[i].z) - std::abs(z0)));
        worst_gap = std::fmax(worst_gap, std::abs(initial[i].z - transformed[i].z));
        worst_energy = std::fmax(
            worst_energy,
            std::fabs(symbol_value(params, Symbol::K0, initial[i].z).real() - e0));
        // exact solution comparison
        const cplx exact = z0 * std::exp(cplx(0.0, -initial[i].time));
        CHECK(std::abs(initial[i].z - exact) < 1e-8);
    }
    CHECK(worst_drift < 1e-9);
    CHECK(worst_gap < 1e-8);
    CHECK(worst_energy < 1e-8);
    CHECK_THROWS_AS(hamilton_flow(params, System::initial, cplx(1.2, 0.0), 1.0, dt),
                    std::domain_error);
}

}  // TEST_SUITE
