#pragma once

#include <vector>

namespace baskakov {

// Node/weight counts for the tensor-product integrators.
struct QuadratureSpec {
    int radial_nodes = 64;    // generalized Gauss-Laguerre points per radial dim
    int angular_nodes = 256;  // equally spaced points per angular dim
    double alpha = 1.0;       // weight exponent: t^{alpha-1} e^{-t}

    bool valid() const {
        return radial_nodes >= 4 && radial_nodes <= 256 && angular_nodes >= 8 &&
               angular_nodes <= 4096 && alpha > 0.0;
    }
};

// Generalized Gauss-Laguerre rule for weight t^{alpha-1} e^{-t} on (0, inf),
// computed by Golub-Welsch (symmetric tridiagonal eigenproblem). weights sum
// to Gamma(alpha); weights_norm are pre-divided by that sum (they are the
// squared first eigenvector components, summing to 1 exactly in theory).
struct GaussLaguerre {
    double alpha = 1.0;
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<double> weights_norm;
};

// Cached per (alpha, n); reference stays valid for the process lifetime.
const GaussLaguerre& gauss_laguerre(double alpha, int n);

// (1/(pi Gamma(alpha)^2)) triple integral of
//   e^{-(s + t + 2 sqrt(st) cos theta) x} e^{-(s+t)} (st)^{alpha-1}
// over (0,inf)^2 x (0,pi): Gauss-Laguerre in s,t, midpoint in theta.
// The combined exponent is <= 0 pointwise, so a single exp never overflows.
double laplace_triple(double alpha, double x, const QuadratureSpec& spec);

// (1/2pi) integral over (-pi,pi) of (1 + 2x(1+x)(1-cos t))^{-n} dt.
// The integrand is even in t, so angular_nodes midpoint evaluations on the
// half period (0,pi) realize the resolution of twice as many full-period
// nodes; 1-cos t is evaluated as 2 sin^2(t/2) to avoid cancellation.
double parseval_integral(int n, double x, int angular_nodes);

// Diagnostics for the multivariate Laplace representation.
struct MultiResult {
    double value = 0.0;
    double imag_residual = 0.0;  // |Im total| / |Re total|
    double min_re_g = 0.0;       // smallest Re g(t, phi) over all node combos
    double cost = 0.0;           // radial^r * angular^(r-1)
};

// f_alpha^[r](x) = (2pi)^{1-r} Gamma(alpha)^{-r} times the integral of
// e^{-x g(t,phi)} e^{-sum t_j} prod t_j^{alpha-1} over (0,inf)^r x (-pi,pi)^{r-1},
//   g(t,phi) = sum_j t_j + (prod_j t_j)^{1/r} (sum_{j<r} e^{i phi_j} + e^{-i sum phi_j}).
// For odd r this equals the alternating series variant of the power sum
// (the defining series carries binom(-alpha,k)^r = (-1)^{rk} [(alpha)_k/k!]^r).
// Throws if radial^r * angular^{r-1} would exceed 1e9 evaluations.
MultiResult laplace_multi_full(double alpha, int r, double x,
                               const QuadratureSpec& spec);

double laplace_multi(double alpha, int r, double x, const QuadratureSpec& spec);

}  // namespace baskakov
