#pragma once

#include "baskakov/log_signed.hpp"

namespace baskakov {

// Parameter triple for the generalized Baskakov family: operator index n,
// family parameter c >= 0 (c = 0 selects the Szasz limit), power exponent r.
struct BaskakovParams {
    int n = 1;
    double c = 1.0;
    int r = 2;

    double alpha() const { return static_cast<double>(n) / c; }
    bool valid() const { return n >= 1 && c >= 0.0 && r >= 1; }
};

inline constexpr long kSeriesCap = 100000;  // hard ceiling on term index k

// p_{n,k}^{[c]}(x) = binom(-n/c, k) (-cx)^k (1 + cx)^{-n/c - k} in log form.
// Requires c > 0, x >= 0. The value is always in [0, 1]; the sign of the
// binomial cancels against (-cx)^k.
LogSignedValue basis_log_value(const BaskakovParams& p, long k, double x);

// Same, exponentiated once at the end.
double basis_value(const BaskakovParams& p, long k, double x);

// Szasz basis e^{-nx} (nx)^k / k!, the c -> 0 limit of basis_value.
double szasz_basis_value(int n, long k, double x);

}  // namespace baskakov
