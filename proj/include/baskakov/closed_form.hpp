#pragma once

#include <gmpxx.h>

#include <complex>
#include <vector>

namespace baskakov {

using Rational = mpq_class;

// Coefficient c_{n,j} = (2j)! (2n-2j-2)! / (2^{2n-2} (j! (n-1-j)!)^2) of the
// even-power expansion of the squared-basis sum at c = 1, exact.
Rational coeff_cnj(int n, int j);

// The closed form psi_{n,1}(x) = sum_{j=0}^{n-1} c_{n,j} (1+2x)^{-2j-1},
// with exact coefficients built once by the term-ratio recurrence
// c_{n,j+1}/c_{n,j} = (2j+1)(n-1-j) / ((2n-2j-3)(j+1)).
struct ClosedFormC1R2 {
    int n = 0;
    std::vector<Rational> coeffs;          // c_{n,0} .. c_{n,n-1}
    std::vector<double> coeffs_d;          // same, rounded once

    static const ClosedFormC1R2& get(int n);  // cached per n

    // Horner in w = (1+2x)^{-2}, then one factor (1+2x)^{-1}. Requires
    // 1 + 2x != 0.
    double eval(double x) const;
    std::complex<double> eval(std::complex<double> x) const;

    // Positive-coefficient magnitude scale sum_j c_{n,j} |1+2x|^{-2j-1},
    // the natural yardstick for "this complex x is a zero".
    double scale_at(std::complex<double> x) const;

    // Exact-form derivative: f^{(m)}(x) = sum_j c_{n,j} (-2)^m (2j+1)_m
    // (1+2x)^{-2j-1-m}. Serves as the independent oracle for jet arithmetic.
    double derivative(int m, double x) const;
};

inline double power_sum_closed_c1_r2(int n, double x) {
    return ClosedFormC1R2::get(n).eval(x);
}
inline std::complex<double> power_sum_closed_c1_r2_complex(
    int n, std::complex<double> x) {
    return ClosedFormC1R2::get(n).eval(x);
}

}  // namespace baskakov
