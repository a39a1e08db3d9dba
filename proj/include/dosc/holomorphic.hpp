#pragma once

#include "dosc/oscillator.hpp"

namespace dosc::holo {

using num::cplx;
using osc::ModelParams;

enum class System { initial, transformed };

/// Vector in the disk representation, stored as monomial coefficients of the
/// representation function: psi(z) = sum coeffs[n] z^n (initial system) or
/// phi(z) = sum coeffs[n] z^n (transformed). The Fourier coefficient with
/// respect to the orthonormal basis is coeffs[n] / a_n (resp. / b_n).
struct HoloSeries {
    System system;
    ModelParams params;
    std::vector<cplx> coeffs;
};

inline constexpr std::size_t kSeriesCapacity = 512;

// Basis element: a_n z^n or b_n z^n depending on the system.
HoloSeries basis_element(const ModelParams& params, System system, int n);

cplx eval(const HoloSeries& series, cplx z);

// Bergman kernels, closed form and truncated-series route.
cplx bergman0(const ModelParams& params, cplx z, cplx w_conj);
cplx bergman1(const ModelParams& params, cplx z, cplx w_conj);
cplx bergman0_series(const ModelParams& params, cplx z, cplx w_conj, int n_terms);
cplx bergman1_series(const ModelParams& params, cplx z, cplx w_conj, int n_terms);

enum class InitialOp { k0, kplus, kminus };
// p+ is the composition L(z) k+(z) L+(z); see the operator coefficient maps.
enum class TransformedOp { p0, pplus, pminus, L, Ldag };

// Exact coefficient maps; raising operators grow the series and throw if the
// truncation budget kSeriesCapacity would be exceeded.
HoloSeries apply_op(const HoloSeries& series, InitialOp op);
HoloSeries apply_op(const HoloSeries& series, TransformedOp op);

// Weighted disk-quadrature inner product (initial: weight e^{-f0} d mu;
// transformed: weight e^{-f1} d nu) and the exact coefficient-space value.
cplx inner_product_holo(const HoloSeries& lhs, const HoloSeries& rhs);
cplx inner_product_coeff(const HoloSeries& lhs, const HoloSeries& rhs);

// zeta^(0)(z) = (1 - zeta zetabar)^k (1 - zeta z)^{-2k}.
cplx coherent_overlap_initial(const ModelParams& params, cplx zeta, cplx z);

}  // namespace dosc::holo
