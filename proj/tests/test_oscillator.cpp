#include <doctest.h>

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

#include "dosc/oscillator.hpp"

using namespace dosc::osc;
using dosc::num::cplx;

namespace {

StateVector sample(const RadialGrid& grid, const std::function<cplx(double)>& f) {
    StateVector state{&grid, {}};
    state.values.reserve(grid.nodes.size());
    for (double x : grid.nodes) {
        state.values.push_back(f(x));
    }
    return state;
}

}  // namespace

TEST_SUITE("oscillator") {

TEST_CASE("make_params derived quantities") {
    const ModelParams a = make_params(0.0, 0);
    CHECK(a.k == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(a.alpha == doctest::Approx(-1.5).epsilon(1e-15));
    const ModelParams b = make_params(2.0, 1);
    CHECK(b.k == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(b.alpha == doctest::Approx(-4.5).epsilon(1e-15));
    const ModelParams c = make_params(6.0, 0);
    CHECK(c.k == doctest::Approx(1.75).epsilon(1e-15));
    CHECK(c.alpha == doctest::Approx(-3.5).epsilon(1e-15));
    CHECK(c.ground_energy() == doctest::Approx(3.5));
    CHECK(c.planck() == doctest::Approx(1.0 / 3.5));
    CHECK_THROWS_AS(make_params(-1.0, 0), std::domain_error);
    CHECK_THROWS_AS(make_params(1.0, -2), std::domain_error);
}

TEST_CASE("energy ladder") {
    CHECK(energy(make_params(2.0, 0), 0) == doctest::Approx(2.5));
    CHECK(energy(make_params(0.0, 0), 3) == doctest::Approx(7.5));
    CHECK(energy(make_params(6.0, 0), 10) == doctest::Approx(23.5));
    CHECK_THROWS_AS(energy(make_params(0.0, 0), -1), std::domain_error);
}

TEST_CASE("eigenfunction orthonormality by quadrature") {
    for (double b : {0.0, 0.5, 2.0, 6.0}) {
        const ModelParams params = make_params(b, 0);
        const RadialGrid grid =
            RadialGrid::quadrature(reference_x_max(params, 15));
        std::vector<StateVector> states;
        for (int n = 0; n <= 8; ++n) {
            states.push_back(
                sample(grid, [&](double x) { return cplx(psi(params, n, x)); }));
        }
        for (int m = 0; m <= 8; ++m) {
            for (int n = 0; n <= 8; ++n) {
                const double target = (m == n) ? 1.0 : 0.0;
                CHECK(std::abs(inner(states[m], states[n]) - target) < 1e-8);
            }
        }
    }
}

TEST_CASE("psi closed form at n = 0") {
    // n = 0 collapses the Laguerre factor: psi_0 = const * x^{2k-1/2} e^{-x^2/4}.
    const ModelParams params = make_params(2.0, 0);  // 2k - 1/2 = 2
    const double r10 = psi(params, 0, 1.0) / psi(params, 0, 2.0);
    const double form10 = (1.0 * std::exp(-0.25)) / (4.0 * std::exp(-1.0));
    CHECK(r10 == doctest::Approx(form10).epsilon(1e-13));
    CHECK_THROWS_AS(psi(params, 0, 0.0), std::domain_error);
    CHECK_THROWS_AS(psi(params, 0, -1.0), std::domain_error);
    CHECK_THROWS_AS(psi(params, -1, 1.0), std::domain_error);
}

TEST_CASE("psi_prime and psi_second vs finite differences") {
    const ModelParams params = make_params(2.0, 0);
    const double h = 2e-4;
    for (int n : {0, 1, 4}) {
        for (double x : {0.7, 1.0, 2.5, 5.0}) {
            const double fd1 = (psi(params, n, x + h) - psi(params, n, x - h)) / (2 * h);
            CHECK(std::fabs(psi_prime(params, n, x) - fd1) < 1e-6);
            const double fd2 = (psi(params, n, x + h) - 2.0 * psi(params, n, x) +
                                psi(params, n, x - h)) /
                               (h * h);
            CHECK(std::fabs(psi_second(params, n, x) - fd2) < 1e-5);
        }
    }
    // n = 0 logarithmic derivative: psi0'/psi0 = (2k-1/2)/x - x/2.
    const double x = 1.3;
    CHECK(psi_prime(params, 0, x) / psi(params, 0, x) ==
          doctest::Approx(2.0 / x - 0.5 * x).epsilon(1e-12));
}

TEST_CASE("apply_h0 eigen residual, linearity, zero state") {
    const ModelParams params = make_params(2.0, 0);
    const RadialGrid grid = RadialGrid::uniform_grid(20.0, 2000);
    for (int n : {0, 1, 5, 10}) {
        const StateVector state =
            sample(grid, [&](double x) { return cplx(psi(params, n, x)); });
        const StateVector hstate = apply_h0(params, state);
        const double e = energy(params, n);
        double worst = 0.0;
        for (std::size_t j = 0; j < grid.nodes.size(); ++j) {
            const double x = grid.nodes[j];
            if (x < 0.5 || x > 19.0) continue;  // stencil ends and the 1/x^2 wall
            worst = std::fmax(worst,
                              std::abs(hstate.values[j] - e * state.values[j]));
        }
        CHECK(worst < 1e-6);
    }

    const StateVector zero = sample(grid, [](double) { return cplx(0.0); });
    for (const cplx v : apply_h0(params, zero).values) {
        CHECK(std::abs(v) == 0.0);
    }

    const StateVector s0 =
        sample(grid, [&](double x) { return cplx(psi(params, 0, x)); });
    const StateVector s1 =
        sample(grid, [&](double x) { return cplx(psi(params, 1, x)); });
    StateVector combo{&grid, {}};
    for (std::size_t j = 0; j < grid.nodes.size(); ++j) {
        combo.values.push_back(2.0 * s0.values[j] + cplx(0.0, 3.0) * s1.values[j]);
    }
    const StateVector lhs = apply_h0(params, combo);
    const StateVector h0a = apply_h0(params, s0);
    const StateVector h0b = apply_h0(params, s1);
    for (std::size_t j = 0; j < grid.nodes.size(); ++j) {
        const cplx rhs = 2.0 * h0a.values[j] + cplx(0.0, 3.0) * h0b.values[j];
        CHECK(std::abs(lhs.values[j] - rhs) < 1e-9 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("coherent_coeff signs and product oracle") {
    const ModelParams params = make_params(2.0, 0);
    CHECK(coherent_coeff(params, 0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(coherent_coeff(params, 1) ==
          doctest::Approx(-std::sqrt(2.0 * params.k)).epsilon(1e-14));
    double prod = 1.0;
    for (int j = 0; j <= 4; ++j) {
        prod *= (2.0 * params.k + j) / (j + 1.0);
    }
    CHECK(coherent_coeff(params, 5) == doctest::Approx(-std::sqrt(prod)).epsilon(1e-13));
    CHECK_THROWS_AS(coherent_coeff(params, -1), std::domain_error);
}

TEST_CASE("coherent_psi closed form") {
    const ModelParams params = make_params(2.0, 0);
    // z = 0 recovers the vacuum.
    for (double x : {0.5, 1.0, 3.0}) {
        CHECK(std::abs(coherent_psi(params, 0.0, x) - psi(params, 0, x)) < 1e-13);
    }
    // unit norm by wide quadrature (the Gaussian width Re q shrinks near z = 1).
    const RadialGrid wide = RadialGrid::quadrature(80.0, 80, 24);
    const cplx z(0.5, 0.2);
    StateVector state{&wide, {}};
    for (double x : wide.nodes) {
        state.values.push_back(coherent_psi(params, z, x));
    }
    CHECK(std::fabs(norm_sq(state) - 1.0) < 1e-8);
    // series route agreement.
    for (double x : {0.4, 1.3, 2.0}) {
        const cplx closed = coherent_psi(params, cplx(0.6, 0.0), x);
        const cplx series = coherent_psi_series(params, cplx(0.6, 0.0), x);
        CHECK(std::abs(closed - series) < 1e-8);
    }
    CHECK_THROWS_AS(coherent_psi(params, cplx(1.0, 0.2), 1.0), std::domain_error);
    // analytic derivatives vs finite differences.
    const double h = 1e-3;
    for (double x : {0.8, 1.7}) {
        const cplx fd1 =
            (coherent_psi(params, z, x + h) - coherent_psi(params, z, x - h)) /
            (2.0 * h);
        CHECK(std::abs(coherent_psi_prime(params, z, x) - fd1) < 1e-6);
        const cplx fd2 = (coherent_psi(params, z, x + h) -
                          2.0 * coherent_psi(params, z, x) +
                          coherent_psi(params, z, x - h)) /
                         (h * h);
        CHECK(std::abs(coherent_psi_second(params, z, x) - fd2) < 1e-5);
    }
}

TEST_CASE("measure weight and resolution of identity") {
    const ModelParams params0 = make_params(0.0, 0);
    CHECK(measure_mu_weight(params0, 0.0) == doctest::Approx(0.5 / M_PI).epsilon(1e-15));
    CHECK_THROWS_AS(measure_mu_weight(params0, 1.0), std::domain_error);

    const ModelParams params = make_params(2.0, 0);
    CHECK(std::abs(initial_gram_element(params, 0, 0) - 1.0) < 1e-6);
    CHECK(std::abs(initial_gram_element(params, 0, 1)) == 0.0);
    CHECK(std::abs(initial_gram_element(params, 5, 5) - 1.0) < 1e-6);
    CHECK(std::abs(initial_gram_element(params, 8, 8) - 1.0) < 1e-6);
}

TEST_CASE("casimir constant") {
    CHECK(casimir_value(make_params(0.0, 0)) == doctest::Approx(3.0 / 16.0));
    CHECK(casimir_value(make_params(2.0, 0)) == doctest::Approx(-5.0 / 16.0));
    CHECK(casimir_value(make_params(6.0, 0)) == doctest::Approx(-21.0 / 16.0));
}

}  // TEST_SUITE
