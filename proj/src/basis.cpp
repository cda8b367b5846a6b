#include "baskakov/basis.hpp"

#include <cmath>
#include <stdexcept>

namespace baskakov {

LogSignedValue pochhammer(double alpha, long k) {
    if (alpha <= 0.0) throw std::domain_error("pochhammer: alpha must be positive");
    if (k < 0) throw std::domain_error("pochhammer: k must be non-negative");
    if (k == 0) return LogSignedValue::one();
    if (k <= 24) {
        // Short products are cheaper and a hair more accurate than lgamma.
        double prod = 1.0;
        for (long i = 0; i < k; ++i) prod *= alpha + static_cast<double>(i);
        return {std::log(prod), +1};
    }
    return {std::lgamma(alpha + static_cast<double>(k)) - std::lgamma(alpha), +1};
}

LogSignedValue binom_neg(double alpha, long k) {
    if (k == 0) return LogSignedValue::one();
    LogSignedValue num = pochhammer(alpha, k);
    const double logkfact =
        (k <= 24) ? std::log(std::tgamma(static_cast<double>(k) + 1.0))
                  : std::lgamma(static_cast<double>(k) + 1.0);
    return {num.log_magnitude - logkfact, (k % 2 == 0) ? +1 : -1};
}

LogSignedValue basis_log_value(const BaskakovParams& p, long k, double x) {
    if (!p.valid()) throw std::domain_error("basis_log_value: invalid parameters");
    if (p.c <= 0.0) throw std::domain_error("basis_log_value: requires c > 0");
    if (x < 0.0) throw std::domain_error("basis_log_value: requires x >= 0");
    if (k < 0) throw std::domain_error("basis_log_value: requires k >= 0");
    if (x == 0.0) return k == 0 ? LogSignedValue::one() : LogSignedValue::zero();

    const double a = p.alpha();
    const double y = p.c * x;
    // binom(-a,k) carries (-1)^k which cancels against (-cx)^k, so the value
    // is positive; only magnitudes are tracked from here on.
    const LogSignedValue b = binom_neg(a, k);
    const double lm = b.log_magnitude + static_cast<double>(k) * std::log(y) -
                      (a + static_cast<double>(k)) * std::log1p(y);
    return {lm, +1};
}

double basis_value(const BaskakovParams& p, long k, double x) {
    return basis_log_value(p, k, x).to_double();
}

double szasz_basis_value(int n, long k, double x) {
    if (x < 0.0) throw std::domain_error("szasz_basis_value: requires x >= 0");
    if (k < 0) throw std::domain_error("szasz_basis_value: requires k >= 0");
    if (x == 0.0) return k == 0 ? 1.0 : 0.0;
    const double y = static_cast<double>(n) * x;
    const double logkfact =
        (k <= 24) ? std::log(std::tgamma(static_cast<double>(k) + 1.0))
                  : std::lgamma(static_cast<double>(k) + 1.0);
    return std::exp(-y + static_cast<double>(k) * std::log(y) - logkfact);
}

}  // namespace baskakov
