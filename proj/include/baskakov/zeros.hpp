#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "baskakov/hypergeom.hpp"

namespace baskakov {

struct ZeroSet {
    std::vector<std::complex<double>> roots;  // sorted by (re, im)
    std::vector<double> residuals;
    int iterations = 0;
    bool converged = false;
};

// All complex roots by Aberth-Ehrlich simultaneous iteration. Deterministic:
// initial guesses sit on a circle of radius (1 + max|a_j/a_deg|)^{1/2} with
// equal spacing and a fixed 0.3799 rad phase offset. converged = false after
// 500 sweeps returns the best iterate. residuals are |poly(root)|, to be
// compared against residual_tol * sum|coeffs|.
ZeroSet find_roots(const RealPolynomial& poly, double residual_tol);

// The 2(n-1) complex zeros of the degree-(2n-2) numerator of the c=1, r=2
// power sum: x = (w - 1)/2 for both square roots w of 1/z over the roots z
// of the degree-(n-1) kernel polynomial. residuals are the closed-form
// magnitudes |f(x)| relative to the positive-coefficient scale at x.
ZeroSet psi_zeros(int n, double residual_tol = 1e-8);

struct MeasureStats {
    double radial_dev_max = 0.0;   // max | |z|-1 |
    double radial_dev_mean = 0.0;
    double angular_ks = 0.0;       // KS distance of arg/2pi vs uniform
    // (test point, | -(1/N) sum log|z-z_k| + log|z| |) at 8 points per
    // radius, anchored at angle 0.
    std::vector<std::pair<std::complex<double>, double>> potential_errors;
    double potential_err_max = 0.0;
};

// Distribution statistics against the unit-circle equilibrium measure.
// test_radii must all exceed 1.
MeasureStats measure_stats(const ZeroSet& zs,
                           const std::vector<double>& test_radii);

// Same statistics for zero sets in the x-plane, after the map z = 2x + 1
// (circle |x + 1/2| = 1/2 becomes the unit circle).
MeasureStats psi_measure_stats(const ZeroSet& xs,
                               const std::vector<double>& test_radii);

}  // namespace baskakov
