#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "dosc/holomorphic.hpp"
#include "dosc/transformed.hpp"

using namespace dosc::transformed;
using dosc::darboux::DarbouxContext;
using dosc::darboux::make_context;
using dosc::darboux::phi;
using dosc::num::cplx;
using dosc::osc::RadialGrid;
using dosc::osc::StateVector;
using dosc::osc::make_params;

TEST_SUITE("transformed") {

TEST_CASE("normalization constant N1z") {
    const ModelParams params = make_params(2.0, 1);
    CHECK(N1z(params, 0.0) ==
          doctest::Approx(1.0 / std::sqrt(4.0 * params.k + 2.0)).epsilon(1e-15));
    const ModelParams p0 = make_params(2.0, 0);
    for (double s : {0.0, 0.3, 0.9}) {
        CHECK(N1z(p0, s) ==
              doctest::Approx(std::sqrt((1.0 - s) / (4.0 * p0.k))).epsilon(1e-14));
    }
    CHECK_THROWS_AS(N1z(params, 1.0), std::domain_error);

    // quadrature cross-check: 1/N1z^2 = <psi_z | h0 - alpha | psi_z>
    //                                 = <L psi_z | L psi_z>.
    const DarbouxContext ctx = make_context(params);
    const RadialGrid wide = RadialGrid::quadrature(80.0, 80, 24);
    const cplx z(0.4, 0.25);
    StateVector ls{&wide, {}};
    for (double x : wide.nodes) {
        ls.values.push_back(dosc::darboux::apply_L(
            ctx, x, dosc::osc::coherent_psi(params, z, x),
            dosc::osc::coherent_psi_prime(params, z, x)));
    }
    const double n1 = N1z(params, std::norm(z));
    CHECK(std::fabs(norm_sq(ls) - 1.0 / (n1 * n1)) < 1e-6 / (n1 * n1));
}

TEST_CASE("b_coeff ratio") {
    // b_n = a_n N_0 / N_n = a_n sqrt((4k+2p+2n)/(4k+2p)).
    const ModelParams params = make_params(0.5, 2);
    for (int n : {0, 1, 7}) {
        const double expected =
            dosc::osc::coherent_coeff(params, n) *
            std::sqrt((4.0 * params.k + 2.0 * params.p + 2.0 * n) /
                      (4.0 * params.k + 2.0 * params.p));
        CHECK(b_coeff(params, n) == doctest::Approx(expected).epsilon(1e-13));
    }
}

TEST_CASE("transformed coherent state phi_z") {
    const ModelParams params = make_params(2.0, 1);
    const DarbouxContext ctx = make_context(params);
    // z = 0 collapses the series to phi_0.
    for (double x : {0.6, 1.5, 3.0}) {
        CHECK(std::abs(phi_z(params, 0.0, x) - phi(ctx, 0, x)) < 1e-10);
    }
    // unit norm by wide quadrature.
    const RadialGrid wide = RadialGrid::quadrature(80.0, 80, 24);
    const cplx z(0.4, -0.3);
    StateVector state{&wide, {}};
    for (double x : wide.nodes) {
        state.values.push_back(phi_z(params, z, x));
    }
    CHECK(std::fabs(norm_sq(state) - 1.0) < 1e-8);
    // series route agreement.
    for (double x : {0.8, 2.0}) {
        CHECK(std::abs(phi_z(params, cplx(0.7, 0.0), x) -
                       phi_z_series(params, cplx(0.7, 0.0), x)) < 1e-8);
    }
    CHECK_THROWS_AS(phi_z(params, cplx(0.9, 0.6), 1.0), std::domain_error);
}

TEST_CASE("measure_h p = 0 reduction") {
    // h(x) at p = 0 is (2k/pi)(1-x)^{-2}: the coherent-state measure weight of
    // the shifted system k' = k + 1/2.
    const ModelParams params = make_params(2.0, 0);
    ModelParams shifted = params;
    shifted.k = params.k + 0.5;
    for (double x : {0.05, 0.4, 0.95}) {
        CHECK(measure_h(params, x) ==
              doctest::Approx(2.0 * params.k / (M_PI * (1.0 - x) * (1.0 - x)))
                  .epsilon(1e-14));
        CHECK(measure_h(params, x) ==
              doctest::Approx(dosc::osc::measure_mu_weight(shifted, x)).epsilon(1e-14));
    }
    CHECK_THROWS_AS(measure_h(params, 0.0), std::domain_error);
    CHECK_THROWS_AS(measure_h(params, 1.0), std::domain_error);
}

TEST_CASE("moment identity") {
    // hand point: p=1, k=1.25, n=0 -> Gamma(2.5)/(Gamma(2.5) * 3.5) = 2/7.
    const ModelParams hand = make_params(2.0, 1);
    CHECK(moment_rhs(hand, 0) == doctest::Approx(2.0 / 7.0).epsilon(1e-14));
    CHECK(moment_integral(hand, 0) == doctest::Approx(2.0 / 7.0).epsilon(1e-9));
    for (double b : {0.0, 2.0, 6.0}) {
        for (int p = 0; p <= 4; ++p) {
            const ModelParams params = make_params(b, p);
            for (int n = 0; n <= 20; ++n) {
                const double rhs = moment_rhs(params, n);
                CHECK(std::fabs(moment_integral(params, n) - rhs) < 1e-9 * rhs);
            }
        }
    }
}

TEST_CASE("beta sum identity") {
    for (double b : {0.0, 2.0, 6.0}) {
        for (int p = 0; p <= 4; ++p) {
            const ModelParams params = make_params(b, p);
            for (int n = 0; n <= 20; ++n) {
                const double rhs = moment_rhs(params, n);
                CHECK(std::fabs(beta_sum_identity_lhs(params, n) - rhs) < 1e-10 * rhs);
            }
        }
    }
}

TEST_CASE("transformed resolution of identity") {
    const ModelParams params = make_params(2.0, 2);
    CHECK(std::abs(resolution_check_transformed(params, 0, 0) - 1.0) < 1e-6);
    CHECK(std::abs(resolution_check_transformed(params, 0, 1)) == 0.0);
    CHECK(std::abs(resolution_check_transformed(params, 5, 5) - 1.0) < 1e-6);
    CHECK(std::abs(resolution_check_transformed(params, 8, 8) - 1.0) < 1e-6);
}

TEST_CASE("overlap function zeta1") {
    const ModelParams params = make_params(2.0, 1);
    // zeta = 0 collapses to 1.
    CHECK(std::abs(zeta1(params, 0.0, cplx(0.3, 0.4)) - 1.0) < 1e-14);
    // series agreement.
    const cplx zeta(0.3, 0.1);
    const cplx z(0.5, 0.0);
    CHECK(std::abs(zeta1(params, zeta, z) - zeta1_series(params, zeta, z)) < 1e-9);
    CHECK_THROWS_AS(zeta1(params, cplx(1.1, 0.0), z), std::domain_error);
    // p = 0 reduction: the initial-system overlap at k' = k + 1/2.
    const ModelParams p0 = make_params(2.0, 0);
    ModelParams shifted = p0;
    shifted.k = p0.k + 0.5;
    for (const cplx zz : {cplx(0.2, -0.5), cplx(0.6, 0.1)}) {
        const cplx reduced = zeta1(p0, zeta, zz);
        const cplx ref = dosc::holo::coherent_overlap_initial(shifted, zeta, zz);
        CHECK(std::abs(reduced - ref) < 1e-12);
    }
}

}  // TEST_SUITE
