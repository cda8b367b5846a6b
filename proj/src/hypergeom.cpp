#include "baskakov/hypergeom.hpp"

#include <cmath>
#include <stdexcept>

#include "baskakov/kahan.hpp"

namespace baskakov {

namespace {

bool is_nonpositive_integer(double v, long& out) {
    if (v > 0.0) return false;
    const double r = std::nearbyint(v);
    if (r != v) return false;
    out = static_cast<long>(-r);
    return true;
}

}  // namespace

double gauss_2f1(double a, double b, double c, double z) {
    long na = 0, nb = 0;
    const bool term_a = is_nonpositive_integer(a, na);
    const bool term_b = is_nonpositive_integer(b, nb);
    long terminate_at = -1;
    if (term_a) terminate_at = na;
    if (term_b && (terminate_at < 0 || nb < terminate_at)) terminate_at = nb;

    if (terminate_at < 0 && std::abs(z) >= 1.0)
        throw std::domain_error("gauss_2f1: |z| must be < 1 for non-terminating series");

    KahanSum sum;
    double term = 1.0;
    sum.add(term);
    const long cap = 50000;
    for (long k = 0; k < cap; ++k) {
        if (terminate_at >= 0 && k >= terminate_at) return sum.value();
        const double ck = c + static_cast<double>(k);
        if (ck == 0.0)
            throw std::domain_error("gauss_2f1: lower parameter hits a non-positive integer");
        term *= (a + static_cast<double>(k)) * (b + static_cast<double>(k)) /
                (ck * (static_cast<double>(k) + 1.0)) * z;
        sum.add(term);
        if (std::abs(term) <= 1e-15 * std::abs(sum.value()) && k > 2)
            return sum.value();
    }
    throw std::runtime_error("gauss_2f1: series did not converge within 5e4 terms");
}

RealPolynomial pn_polynomial(int n) {
    if (n < 0) throw std::domain_error("pn_polynomial: requires n >= 0");
    RealPolynomial p;
    p.coeffs.reserve(n + 1);
    mpq_class c = 1;
    p.coeffs.push_back(c);
    for (int j = 0; j < n; ++j) {
        // ratio = (-n+j)(1/2+j) / ((-n+1/2+j)(j+1))
        //       = (j-n)(2j+1) / ((2j+1-2n)(j+1)) in integer form.
        // mpq arithmetic requires canonical operands (positive denominator,
        // coprime), so the ratio must be canonicalized before the multiply.
        mpq_class ratio(static_cast<long>(j - n) * (2 * j + 1),
                        static_cast<long>(2 * j + 1 - 2 * n) * (j + 1));
        ratio.canonicalize();
        c *= ratio;
        p.coeffs.push_back(c);
    }
    return p;
}

mpq_class bridge_factor(int n) {
    if (n < 1) throw std::domain_error("bridge_factor: requires n >= 1");
    // (2n-3)!! / (2^{n-1} (n-1)!)
    mpz_class num = 1;
    for (int i = 2 * n - 3; i >= 1; i -= 2) num *= i;
    mpz_class den;
    mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned>(n - 1));
    mpz_class two_pow = 1;
    mpz_mul_2exp(two_pow.get_mpz_t(), two_pow.get_mpz_t(),
                 static_cast<unsigned>(n - 1));
    mpq_class out(num, den * two_pow);
    out.canonicalize();
    return out;
}

double elliptic_K_agm(double k) {
    if (k < 0.0 || k >= 1.0)
        throw std::domain_error("elliptic_K_agm: requires 0 <= k < 1");
    double a = 1.0;
    double b = std::sqrt((1.0 - k) * (1.0 + k));
    for (int i = 0; i < 64 && std::abs(a - b) > 1e-17 * a; ++i) {
        const double am = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = am;
    }
    return M_PI / (2.0 * a);
}

double elliptic_cm_profile(double x) {
    if (x < 0.0) throw std::domain_error("elliptic_cm_profile: requires x >= 0");
    return elliptic_K_agm(x / (1.0 + x)) / (1.0 + x);
}

}  // namespace baskakov
