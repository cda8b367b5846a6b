#pragma once

#include <cmath>
#include <limits>

namespace baskakov {

// A real value stored as log|v| plus a sign, so that products and powers
// spanning thousands of orders of magnitude stay representable. sign == 0
// encodes an exact zero. Conversion back to double saturates: magnitudes
// beyond the double range come out as +-inf or 0 from std::exp rather than
// trapping, and callers that care test log_magnitude first.
struct LogSignedValue {
    double log_magnitude = -std::numeric_limits<double>::infinity();
    int sign = 0;

    static LogSignedValue zero() { return {}; }
    static LogSignedValue one() { return {0.0, +1}; }

    double to_double() const {
        if (sign == 0) return 0.0;
        const double m = std::exp(log_magnitude);
        return sign > 0 ? m : -m;
    }

    LogSignedValue operator*(const LogSignedValue& o) const {
        if (sign == 0 || o.sign == 0) return zero();
        return {log_magnitude + o.log_magnitude, sign * o.sign};
    }
};

// Rising factorial (alpha)_k = alpha (alpha+1) ... (alpha+k-1), alpha > 0.
LogSignedValue pochhammer(double alpha, long k);

// Signed binomial coefficient binom(-alpha, k) = (-1)^k (alpha)_k / k!.
LogSignedValue binom_neg(double alpha, long k);

}  // namespace baskakov
