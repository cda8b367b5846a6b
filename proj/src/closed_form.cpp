#include "baskakov/closed_form.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "baskakov/kahan.hpp"

namespace baskakov {

Rational coeff_cnj(int n, int j) {
    if (n < 1) throw std::domain_error("coeff_cnj: requires n >= 1");
    if (j < 0 || j > n - 1) throw std::domain_error("coeff_cnj: j out of [0, n-1]");
    mpz_class num, f1, f2;
    mpz_fac_ui(num.get_mpz_t(), 2u * static_cast<unsigned>(j));
    mpz_fac_ui(f1.get_mpz_t(), 2u * static_cast<unsigned>(n - j - 1));
    num *= f1;
    mpz_class den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 2u * static_cast<unsigned>(n) - 2u);
    mpz_fac_ui(f1.get_mpz_t(), static_cast<unsigned>(j));
    mpz_fac_ui(f2.get_mpz_t(), static_cast<unsigned>(n - 1 - j));
    den *= f1 * f1 * f2 * f2;
    Rational out(num, den);
    out.canonicalize();
    return out;
}

const ClosedFormC1R2& ClosedFormC1R2::get(int n) {
    if (n < 1) throw std::domain_error("ClosedFormC1R2: requires n >= 1");
    static std::map<int, ClosedFormC1R2> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    ClosedFormC1R2 cf;
    cf.n = n;
    cf.coeffs.reserve(n);
    // c_{n,0} = binom(2n-2, n-1) / 4^{n-1}, then the exact ratio recurrence.
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), 2u * static_cast<unsigned>(n) - 2u,
                 static_cast<unsigned>(n) - 1u);
    mpz_class four_pow = 1;
    mpz_mul_2exp(four_pow.get_mpz_t(), four_pow.get_mpz_t(),
                 2u * static_cast<unsigned>(n) - 2u);
    Rational c(b, four_pow);
    c.canonicalize();
    for (int j = 0; j < n; ++j) {
        cf.coeffs.push_back(c);
        if (j + 1 < n) {
            Rational ratio(static_cast<long>(2 * j + 1) * (n - 1 - j),
                           static_cast<long>(2 * n - 2 * j - 3) * (j + 1));
            ratio.canonicalize();
            c *= ratio;
        }
    }
    Rational sum = 0;
    for (const auto& cj : cf.coeffs) sum += cj;
    if (sum != 1) throw std::logic_error("ClosedFormC1R2: coefficient sum != 1");
    cf.coeffs_d.reserve(n);
    for (const auto& cj : cf.coeffs) cf.coeffs_d.push_back(cj.get_d());

    auto [pos, inserted] = cache.emplace(n, std::move(cf));
    (void)inserted;
    return pos->second;
}

double ClosedFormC1R2::eval(double x) const {
    const double t = 1.0 + 2.0 * x;
    if (t == 0.0) throw std::domain_error("ClosedFormC1R2::eval: pole at x = -1/2");
    const double w = 1.0 / (t * t);
    double acc = 0.0;
    for (auto it = coeffs_d.rbegin(); it != coeffs_d.rend(); ++it)
        acc = acc * w + *it;
    return acc / t;
}

std::complex<double> ClosedFormC1R2::eval(std::complex<double> x) const {
    const std::complex<double> t = 1.0 + 2.0 * x;
    if (std::abs(t) == 0.0)
        throw std::domain_error("ClosedFormC1R2::eval: pole at x = -1/2");
    const std::complex<double> w = 1.0 / (t * t);
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_d.rbegin(); it != coeffs_d.rend(); ++it)
        acc = acc * w + *it;
    return acc / t;
}

double ClosedFormC1R2::scale_at(std::complex<double> x) const {
    const double t = std::abs(1.0 + 2.0 * x);
    if (t == 0.0) throw std::domain_error("ClosedFormC1R2::scale_at: pole at x = -1/2");
    const double w = 1.0 / (t * t);
    double acc = 0.0;
    for (auto it = coeffs_d.rbegin(); it != coeffs_d.rend(); ++it)
        acc = acc * w + *it;
    return acc / t;
}

double ClosedFormC1R2::derivative(int m, double x) const {
    if (m < 0) throw std::domain_error("ClosedFormC1R2::derivative: m >= 0");
    const double t = 1.0 + 2.0 * x;
    if (t == 0.0)
        throw std::domain_error("ClosedFormC1R2::derivative: pole at x = -1/2");
    KahanSum sum;
    const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
    const double two_m = std::pow(2.0, m);
    for (int j = 0; j < n; ++j) {
        double rising = 1.0;  // (2j+1)_m
        for (int i = 0; i < m; ++i) rising *= 2.0 * j + 1.0 + i;
        sum.add(coeffs_d[j] * rising * std::pow(t, -(2.0 * j + 1.0 + m)));
    }
    return sgn * two_m * sum.value();
}

}  // namespace baskakov
