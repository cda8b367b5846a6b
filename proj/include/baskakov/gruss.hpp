#pragma once

#include <functional>

#include "baskakov/basis.hpp"

namespace baskakov {

// One evaluation of the Chebyshev functional bound at a point x: with
// weights a_k = p_{n,k}^{[c]}(x) and L(f) = sum_k a_k f(k/n),
//   |L(fg) - L(f) L(g)| <= (1/2) (1 - sum_k a_k^2) osc(f) osc(g)
//                       <= (1/2) osc(f) osc(g).
struct GrussReport {
    double x = 0.0;
    double lhs = 0.0;      // |L(fg) - L(f) L(g)|
    double sum_sq = 0.0;   // sum a_k^2, in [0, 1]
    double bound_tight = 0.0;
    double bound_simple = 0.0;
    double osc_f = 0.0;
    double osc_g = 0.0;
    bool holds_tight = false;
    bool holds_simple = false;
    long k_trunc = 0;         // last weight index used
    double weight_mass = 0.0; // sum of the truncated weights
};

// Sample maps give f(k/n) for weight index k. Oscillations are taken over
// the truncated index range 0..k_trunc, a certified lower bound on the sup;
// the truncated weight mass must reach 1 - 1e-12 (throws otherwise).
// k_trunc < 0 extends the range automatically until the mass requirement
// is met.
GrussReport gruss_verify(const BaskakovParams& p, double x,
                         const std::function<double(long)>& f_samples,
                         const std::function<double(long)>& g_samples,
                         long k_trunc, double tol);

}  // namespace baskakov
