#pragma once

#include <vector>

namespace dosc::specfun {

/// Generalized Laguerre values L_0^alpha(x) ... L_{n_max}^alpha(x) at a fixed
/// argument, produced by the forward three-term recurrence.
struct LaguerreTable {
    double alpha;
    int n_max;
    double x;
    std::vector<double> values;
};

// ln Gamma(x), x > 0. Lanczos approximation, relative error well below 1e-13.
double log_gamma(double x);

LaguerreTable laguerre_all(int n_max, double alpha, double x);

// Single value; n < 0 returns 0 (standard convention, used by the Darboux
// closed forms where L_{p-1}, L_{p-2} appear).
double laguerre(int n, double alpha, double x);

// B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b), evaluated in log space.
double beta(double a, double b);

// Exact binomial coefficient C(p, j), 0 <= j <= p.
long long binomial(int p, int j);

}  // namespace dosc::specfun
