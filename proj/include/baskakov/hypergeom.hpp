#pragma once

#include <gmpxx.h>

#include <vector>

namespace baskakov {

// Gauss 2F1(a, b; c; z) by direct series with compensated summation.
// Detects termination when a or b is a non-positive integer; otherwise
// requires |z| < 1. Converges to relative 1e-13 or throws after 5e4 terms.
double gauss_2f1(double a, double b, double c, double z);

// Polynomial with exact rational coefficients, ascending degree order.
struct RealPolynomial {
    std::vector<mpq_class> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    std::vector<double> to_double() const {
        std::vector<double> out;
        out.reserve(coeffs.size());
        for (const auto& c : coeffs) out.push_back(c.get_d());
        return out;
    }
    double eval(double z) const {
        double acc = 0.0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
            acc = acc * z + it->get_d();
        return acc;
    }
};

// P_n(z): the terminating 2F1(-n, 1/2; -n+1/2; z), built by the exact
// coefficient ratio (-n+j)(1/2+j) / ((-n+1/2+j)(j+1)). All coefficients are
// positive and the sequence is palindromic. P_0 = 1.
RealPolynomial pn_polynomial(int n);

// binom(n - 3/2, n - 1) = (2n-3)!! / (2^{n-1} (n-1)!), exact; the factor
// linking P_{n-1}'s coefficients to c_{n,j}.
mpq_class bridge_factor(int n);

// Complete elliptic integral K(k) by the arithmetic-geometric mean,
// absolute accuracy ~1e-15. Domain 0 <= k < 1.
double elliptic_K_agm(double k);

// K(x/(1+x)) / (1+x), the completely monotonic elliptic profile.
double elliptic_cm_profile(double x);

}  // namespace baskakov
