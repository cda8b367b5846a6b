#pragma once

#include "baskakov/basis.hpp"

namespace baskakov {

// Result of a certified truncated series evaluation.
struct SeriesEval {
    enum class Status { Converged, TruncationCapHit };

    double value = 0.0;
    long terms_used = 0;
    double tail_bound = 0.0;
    Status status = Status::Converged;
};

// Power sum psi_{n,c}^{[r]}(x) = sum_k p_{n,k}^{[c]}(x)^r. All terms are
// non-negative; the truncation tail is certified by a geometric majorant of
// the exact term ratio (see alpha_power_sum). c = 0 routes to Szasz terms.
SeriesEval power_sum_series(const BaskakovParams& p, double x, double rel_tol);

// The alpha-form engine: with q = y/(1+y),
//   sum_k s^k [(alpha)_k / k!]^r q^{rk} * (1+y)^{-r alpha},
// where s = +1 (the power-sum case, any r) or s = -1 (the alternating
// variant that the multivariate Laplace representation produces for odd r).
// Terms are generated by the exact ratio rho_k = ((alpha+k)/(k+1)) q around
// the peak index, summed with compensation, and the tail is bounded by
// term * g^r / (1 - g^r) with g = max(rho_k, q), a true supremum of the
// remaining ratios in both monotonicity regimes of rho.
SeriesEval alpha_power_sum(double alpha, int r, double y, double rel_tol,
                           bool alternating = false);

// e^{-y} I0(y): power series below y = 20, scaled asymptotic series above.
double bessel_i0_scaled(double y);

// psi_{n,0}(x) = e^{-2nx} I0(2nx), the squared-Szasz sum.
double szasz_sum(int n, double x);

}  // namespace baskakov
