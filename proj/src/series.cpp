#include "baskakov/series.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "baskakov/kahan.hpp"

namespace baskakov {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Shared peak-centered summation for series whose term ratio rho(k) is
// monotone in k with limit rho_inf < 1. Terms are handled in a scaled space
// where the peak term is 1, so the leading factor may underflow without
// destroying the sum. log_term(k) must return log t_k.
SeriesEval sweep_sum(const std::function<double(long)>& log_term,
                     const std::function<double(long)>& rho, double rho_inf,
                     long k_peak, int r, double rel_tol, bool alternating) {
    SeriesEval out;
    const double L0 = log_term(k_peak);

    KahanSum total;
    KahanSum total_abs;
    long terms = 0;
    double tail_up_scaled = kInf;
    double tail_down_scaled = 0.0;
    bool up_ok = false;
    bool down_ok = true;

    auto term_sign = [&](long k) {
        return (!alternating || k % 2 == 0) ? 1.0 : -1.0;
    };

    // Upward sweep from the peak.
    double s = 1.0;
    for (long k = k_peak; k <= kSeriesCap; ++k) {
        total.add(term_sign(k) * s);
        total_abs.add(s);
        ++terms;
        const double rk = rho(k);
        const double g = std::max(rk, rho_inf);
        if (g < 1.0) {
            const double gr = std::pow(g, r);
            tail_up_scaled = s * gr / (1.0 - gr);
            if (tail_up_scaled <= 0.5 * rel_tol * total_abs.value()) {
                up_ok = true;
                break;
            }
        }
        s *= std::pow(rk, r);
    }

    // Downward sweep below the peak. There rho(k) > 1 and, moving down, the
    // step ratio 1/rho^r only shrinks, giving a geometric majorant again.
    if (k_peak > 0) {
        down_ok = false;
        double sd = 1.0;
        for (long k = k_peak; k >= 1; --k) {
            const double rkm = rho(k - 1);
            sd /= std::pow(rkm, r);
            total.add(term_sign(k - 1) * sd);
            total_abs.add(sd);
            ++terms;
            if (rkm > 1.0) {
                const double h = std::pow(1.0 / rkm, r);
                tail_down_scaled = sd * h / (1.0 - h);
                if (tail_down_scaled <= 0.5 * rel_tol * total_abs.value()) {
                    down_ok = true;
                    break;
                }
            }
            if (k == 1) {
                tail_down_scaled = 0.0;
                down_ok = true;
            }
        }
    }

    const double tot = total.value();
    double value;
    if (L0 < -700.0 && std::abs(tot) > 0.0) {
        value = std::copysign(std::exp(L0 + std::log(std::abs(tot))), tot);
    } else {
        value = std::exp(L0) * tot;
    }

    const double tail_scaled =
        (tail_up_scaled == kInf) ? kInf : tail_up_scaled + tail_down_scaled;
    out.value = value;
    out.terms_used = terms;
    out.tail_bound = (tail_scaled == kInf) ? kInf : std::exp(L0) * tail_scaled;
    out.status = (up_ok && down_ok) ? SeriesEval::Status::Converged
                                    : SeriesEval::Status::TruncationCapHit;
    return out;
}

}  // namespace

SeriesEval alpha_power_sum(double alpha, int r, double y, double rel_tol,
                           bool alternating) {
    if (alpha <= 0.0) throw std::domain_error("alpha_power_sum: alpha must be positive");
    if (y < 0.0) throw std::domain_error("alpha_power_sum: requires y >= 0");
    if (r < 1) throw std::domain_error("alpha_power_sum: requires r >= 1");
    if (!(rel_tol > 0.0 && rel_tol < 1.0))
        throw std::domain_error("alpha_power_sum: rel_tol must lie in (0,1)");
    if (y == 0.0) return {1.0, 1, 0.0, SeriesEval::Status::Converged};

    const double q = y / (1.0 + y);
    const double base = -alpha * std::log1p(y);
    const double logq = std::log(q);
    const double lga = std::lgamma(alpha);

    auto log_term = [=](long k) {
        const double kk = static_cast<double>(k);
        return r * (std::lgamma(alpha + kk) - lga - std::lgamma(kk + 1.0) +
                    kk * logq + base);
    };
    auto rho = [=](long k) {
        const double kk = static_cast<double>(k);
        return (alpha + kk) / (kk + 1.0) * q;
    };

    const double kstar = (alpha * q - 1.0) / (1.0 - q);
    long k_peak = kstar > 0.0 ? static_cast<long>(std::floor(kstar)) : 0;
    if (k_peak > kSeriesCap) k_peak = kSeriesCap;

    return sweep_sum(log_term, rho, q, k_peak, r, rel_tol, alternating);
}

SeriesEval power_sum_series(const BaskakovParams& p, double x, double rel_tol) {
    if (!p.valid()) throw std::domain_error("power_sum_series: invalid parameters");
    if (x < 0.0) throw std::domain_error("power_sum_series: requires x >= 0");
    if (!(rel_tol > 0.0 && rel_tol < 1.0))
        throw std::domain_error("power_sum_series: rel_tol must lie in (0,1)");
    if (x == 0.0) return {1.0, 1, 0.0, SeriesEval::Status::Converged};

    if (p.c > 0.0) return alpha_power_sum(p.alpha(), p.r, p.c * x, rel_tol);

    // Szasz limit: terms (e^{-nx} (nx)^k / k!)^r, ratio (y/(k+1))^r.
    const double y = static_cast<double>(p.n) * x;
    const double logy = std::log(y);
    auto log_term = [=, r = p.r](long k) {
        const double kk = static_cast<double>(k);
        return r * (-y + kk * logy - std::lgamma(kk + 1.0));
    };
    auto rho = [=](long k) { return y / (static_cast<double>(k) + 1.0); };
    long k_peak = y > 1.0 ? static_cast<long>(std::floor(y - 1.0)) : 0;
    if (k_peak > kSeriesCap) k_peak = kSeriesCap;

    return sweep_sum(log_term, rho, 0.0, k_peak, p.r, rel_tol, false);
}

double bessel_i0_scaled(double y) {
    if (y < 0.0) throw std::domain_error("bessel_i0_scaled: requires y >= 0");
    if (y <= 20.0) {
        const double z = 0.25 * y * y;
        double term = 1.0;
        KahanSum sum;
        sum.add(term);
        for (int k = 0; k < 1000; ++k) {
            term *= z / ((k + 1.0) * (k + 1.0));
            sum.add(term);
            if (term < 1e-18 * sum.value()) break;
        }
        return std::exp(-y) * sum.value();
    }
    // Scaled asymptotic series: e^{-y} I0(y) ~ (2 pi y)^{-1/2} sum_k a_k,
    // a_{k+1}/a_k = (2k+1)^2 / (8y(k+1)); truncate at the smallest term.
    double term = 1.0;
    KahanSum sum;
    sum.add(term);
    for (int k = 0; k < 200; ++k) {
        const double ratio =
            (2.0 * k + 1.0) * (2.0 * k + 1.0) / (8.0 * y * (k + 1.0));
        if (ratio >= 1.0) break;
        term *= ratio;
        sum.add(term);
        if (term < 1e-18 * sum.value()) break;
    }
    return sum.value() / std::sqrt(2.0 * M_PI * y);
}

double szasz_sum(int n, double x) {
    if (x < 0.0) throw std::domain_error("szasz_sum: requires x >= 0");
    return bessel_i0_scaled(2.0 * static_cast<double>(n) * x);
}

}  // namespace baskakov
