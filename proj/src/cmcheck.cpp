#include "baskakov/cmcheck.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "baskakov/basis.hpp"
#include "baskakov/closed_form.hpp"
#include "baskakov/hypergeom.hpp"

namespace baskakov {

namespace {

// log of (alpha)_k / k!, in extended precision: an absolute error eps here
// scales the whole term jet by exp(eps), and the term sums downstream cancel
// by enough orders that double lgamma alone would cap the top derivatives
// near 1e-8 relative.
long double log_term_prefactor(double alpha, long k) {
    const long double a = alpha;
    return std::lgamma(a + static_cast<long double>(k)) - std::lgamma(a) -
           std::lgamma(static_cast<long double>(k) + 1.0L);
}

// Taylor coefficients at z0 > 0 of G(z) = sum_k s_k w_k z^k, where w_0 = 1,
// w_k = w_{k-1} * wratio(k) > 0, and s_k is +1 (or (-1)^k when alternating):
// gamma[i] = sum_k s_k w_k binom(k, i) z0^{k-i}. With s_k = +1 every
// contribution is positive, so the sums carry no cancellation at all; this is
// what lets the jets downstream hold far more digits than any termwise
// summation of the series, whose per-term coefficients dwarf their sum at
// high order. The terms are generated downward from i = min(k, order) so the
// z0 powers only ever shrink contributions that really are small.
template <typename RatioFn>
std::vector<long double> taylor_of_weight_series(long double z0, int order,
                                                 bool alternating,
                                                 RatioFn&& wratio) {
    std::vector<long double> gamma(order + 1, 0.0L);
    std::vector<long double> scale(order + 1, 0.0L);
    long double u = 1.0L;     // w_k * z0^{max(0, k-order)}
    long double bmax = 1.0L;  // binom(k, min(k, order))
    long grace = -1;          // extra terms after the negligibility threshold
    for (long k = 0;; ++k) {
        if (k > kSeriesCap)
            throw std::runtime_error(
                "taylor_of_weight_series: series cap exceeded");
        if (k > 0) {
            u *= wratio(k);
            if (k > order) {
                u *= z0;
                bmax *= static_cast<long double>(k) / (k - order);
            }
        }
        const long double sgn =
            (alternating && (k % 2 != 0)) ? -1.0L : 1.0L;
        long double t = u * bmax;
        bool small = (k >= order);
        for (long i = std::min<long>(k, order); i >= 0; --i) {
            gamma[i] += sgn * t;
            scale[i] += t;
            if (t > 1e-22L * scale[i]) small = false;
            if (i > 0) t *= (static_cast<long double>(i) * z0) / (k - i + 1);
        }
        if (small) {
            if (grace < 0) grace = 8;
            if (--grace == 0) break;
        } else {
            grace = -1;
        }
    }
    return gamma;
}

// Evaluates sum_i gamma[i] (z - z(center))^i as a jet by Horner's rule. The
// increment jet has no constant term, so the truncated sum is exact at the
// jet's order.
TaylorJet compose_series(const std::vector<long double>& gamma,
                         const TaylorJet& z, double center) {
    const int M = z.order();
    TaylorJet dz = z;
    dz.coeff(0) = 0.0L;
    TaylorJet h(center, M);
    h.coeff(0) = gamma[M];
    for (int i = M - 1; i >= 0; --i) {
        h = h * dz;
        h.coeff(0) += gamma[i];
    }
    return h;
}

}  // namespace

TaylorJet f_alpha_jet(double alpha, int r, double y0, int order,
                      bool alternating) {
    if (!(alpha > 0.0) || r < 1 || y0 < 0.0)
        throw std::domain_error("f_alpha_jet: need alpha > 0, r >= 1, y >= 0");
    if (order < 0 || order > TaylorJet::kMaxOrder)
        throw std::domain_error("f_alpha_jet: order out of range");

    const bool odd_signs = alternating && (r % 2 == 1);

    if (y0 == 0.0) {
        // Only terms with r*k <= order reach the truncated jet: term k is
        // C_k eps^{rk} (1 + eps)^{-r(alpha+k)} with C_k = [(alpha)_k/k!]^r.
        TaylorJet base = TaylorJet::variable(0.0, order) + 1.0;
        TaylorJet sum(0.0, order);
        for (long k = 0; static_cast<long>(r) * k <= order; ++k) {
            long double w = std::exp(static_cast<long double>(r) *
                                     log_term_prefactor(alpha, k));
            if (odd_signs && (k % 2 != 0)) w = -w;
            long double p = -static_cast<long double>(r) *
                            (static_cast<long double>(alpha) + k);
            sum = sum + jet_pow(base, p).shifted(static_cast<int>(r * k)) * w;
        }
        return sum;
    }

    // f = (1+y)^{-r alpha} G(z) with z = [y/(1+y)]^r and G(z) given by the
    // weight series over [(alpha)_k/k!]^r. Both u = y/(1+y) and f itself are
    // analytic in |y - y0| < 1 + y0, and G's coefficients come out of
    // cancellation-free positive sums, so composing the two keeps every
    // intermediate on the scale of the result. Termwise routes (exp/log jets
    // or per-term products) shred the top derivatives instead: the term
    // coefficients cancel across k by many orders of magnitude.
    const TaylorJet y = TaylorJet::variable(y0, order);
    const TaylorJet one_py = y + 1.0;
    const long double rr = static_cast<long double>(r);
    const long double al = static_cast<long double>(alpha);

    if (r == 1) {
        // The weight series telescopes against the prefactor: the plain sum
        // is identically 1, the sign-alternating one is (1+2y)^{-alpha}.
        if (!odd_signs) {
            TaylorJet one(y0, order);
            one.coeff(0) = 1.0L;
            return one;
        }
        return jet_pow(y * 2.0 + 1.0, -al);
    }

    TaylorJet z = y * jet_recip(one_py);
    {
        const TaylorJet u = z;
        for (int i = 1; i < r; ++i) z = z * u;
    }

    if (r == 2 && al >= 1.0L) {
        // G blows up like (1-z)^{1-2 alpha} at z = 1, and for alpha much
        // above 1 the Taylor coefficients of G at z0 grow so fast that their
        // last-bit noise swamps the composed jet, whose coefficients stay
        // small. Swapping in the reflected weights ((1-alpha)_k/k!)^2, whose
        // series is G scaled by that same power of 1-z, removes the blowup:
        // the squared step ratio ((k-alpha)/k)^2 keeps every coefficient sum
        // positive and the series stays bounded near z = 1 (it terminates
        // when alpha is an integer).
        const std::vector<long double> g = taylor_of_weight_series(
            z.coeff(0), order, false, [al](long k) {
                const long double d = (static_cast<long double>(k) - al) / k;
                return d * d;
            });
        const TaylorJet h = compose_series(g, z, y0);

        // What is left is (1+y)^beta (1+2y)^{-beta-1} with beta = 2 alpha-2.
        // For integer beta (every alpha on a half-integer grid) expand
        // (1+y)^beta = 2^{-beta} (1+t)^beta in t = 1+2y: a finite sum of
        // pure powers of a two-term base. Each power jet is a single-step
        // recurrence, and at fixed coefficient order every summand carries
        // the same sign, so the assembly adds no cancellation at all. A
        // power recurrence on the full 1-z jet instead loses several digits
        // across that jet's sign change.
        const long double beta = 2.0L * al - 2.0L;
        if (beta == std::floor(beta) && beta <= 512.0L) {
            const int b = static_cast<int>(beta);
            const TaylorJet t = y * 2.0 + 1.0;
            TaylorJet w(y0, order);
            long double cb = std::exp2(-beta);
            for (int j = 0; j <= b; ++j) {
                w = w + jet_pow(t, static_cast<long double>(j) - beta - 1.0L) *
                            cb;
                cb *= static_cast<long double>(b - j) / (j + 1);
            }
            return h * w;
        }
        const TaylorJet s = z * (-1.0) + 1.0;
        return h * jet_pow(s, 1.0L - 2.0L * al) * jet_pow(one_py, -2.0L * al);
    }

    const std::vector<long double> g = taylor_of_weight_series(
        z.coeff(0), order, odd_signs,
        [al, rr](long k) { return std::pow((al + (k - 1)) / k, rr); });
    return compose_series(g, z, y0) * jet_pow(one_py, -rr * al);
}

TaylorJet psi_jet(const BaskakovParams& p, double x0, int order) {
    if (!p.valid() || x0 < 0.0)
        throw std::domain_error("psi_jet: invalid parameters");
    if (order < 0 || order > TaylorJet::kMaxOrder)
        throw std::domain_error("psi_jet: order out of range");

    if (p.c > 0.0) {
        TaylorJet f = f_alpha_jet(p.alpha(), p.r, p.c * x0, order);
        TaylorJet out(x0, order);
        long double cm = 1.0L;
        for (int m = 0; m <= order; ++m) {
            out.coeff(m) = f.coeff(m) * cm;
            cm *= p.c;
        }
        return out;
    }

    // Szasz limit: term k is [e^{-nx} (nx)^k / k!]^r.
    const double rn = static_cast<double>(p.r) * p.n;
    const TaylorJet x = TaylorJet::variable(x0, order);
    if (x0 == 0.0) {
        TaylorJet damp = jet_exp(x * (-rn));
        TaylorJet sum(0.0, order);
        for (long k = 0; static_cast<long>(p.r) * k <= order; ++k) {
            long double w = std::exp(
                static_cast<long double>(p.r) *
                (k * std::log(static_cast<long double>(p.n)) -
                 std::lgamma(static_cast<long double>(k) + 1.0L)));
            sum = sum + damp.shifted(static_cast<int>(p.r * k)) * w;
        }
        return sum;
    }

    // Same composition route as the c > 0 series: psi = e^{-rnx} G(z) with
    // z = x^r and the weight series over [n^k/k!]^r. The damping factor has
    // a linear exponent, so its recurrence is cancellation free.
    const long double rr = static_cast<long double>(p.r);
    const long double nn = static_cast<long double>(p.n);
    const TaylorJet z = jet_pow(x, rr);
    const std::vector<long double> g = taylor_of_weight_series(
        z.coeff(0), order, false,
        [nn, rr](long k) { return std::pow(nn / k, rr); });
    return compose_series(g, z, x0) * jet_exp(x * (-rn));
}

TaylorJet taylor_basis_power(const BaskakovParams& p, long k, double x0,
                             int order) {
    if (!p.valid() || p.c <= 0.0 || k < 0 || x0 < 0.0)
        throw std::domain_error("taylor_basis_power: invalid parameters");
    if (order < 0 || order > TaylorJet::kMaxOrder)
        throw std::domain_error("taylor_basis_power: order out of range");

    const double alpha = p.alpha();
    const long double rr = static_cast<long double>(p.r);
    const long double log_b = log_term_prefactor(alpha, k);
    const long double ak = static_cast<long double>(alpha) + k;

    if (x0 == 0.0) {
        if (static_cast<long>(p.r) * k > order) return TaylorJet(0.0, order);
        TaylorJet base = TaylorJet::variable(0.0, order) * p.c + 1.0;
        long double w = std::exp(
            rr * (log_b + k * std::log(static_cast<long double>(p.c))));
        return jet_pow(base, -rr * ak).shifted(static_cast<int>(p.r * k)) * w;
    }

    // Balanced factorization once more: u^{rk} (1+cx)^{-r alpha} with
    // u = cx/(1+cx) stays on the basis power's own scale for any k.
    const TaylorJet x = TaylorJet::variable(x0, order);
    const TaylorJet one_pcx = x * p.c + 1.0;
    const TaylorJet u = (x * p.c) * jet_recip(one_pcx);
    const long double w = std::exp(rr * log_b);
    return jet_pow(u, rr * static_cast<long double>(k)) *
           jet_pow(one_pcx, -rr * static_cast<long double>(alpha)) * w;
}

TaylorJet elliptic_profile_jet(double x0, int order) {
    constexpr long double kHalfPi = 1.57079632679489661923L;
    return f_alpha_jet(0.5, 2, x0, order) * kHalfPi;
}

namespace {

// row_of(x) must return the derivatives f^(0)(x) .. f^(order)(x).
template <typename RowFn>
CMReport build_cm_report(const std::vector<double>& grid, int order,
                         RowFn&& row_of) {
    CMReport rep;
    rep.grid = grid;
    rep.max_order = order;
    rep.min_signed.reserve(grid.size());
    for (double x : grid) {
        std::vector<double> row = row_of(x);
        double scale = 0.0;
        for (int m = 0; m <= order; ++m) {
            if (m % 2 != 0) row[m] = -row[m];
            scale = std::max(scale, std::fabs(row[m]));
        }
        const double cut = kCmTolAbs + kCmTolRel * scale;
        for (int m = 0; m <= order; ++m) {
            if (row[m] < -cut)
                rep.violations.push_back({x, m, row[m]});
            else if (row[m] < 0.0)
                rep.indeterminate.push_back({x, m, row[m]});
            rep.worst = std::min(rep.worst, row[m]);
        }
        rep.min_signed.push_back(std::move(row));
    }
    rep.verdict = rep.violations.empty() ? CMReport::Verdict::ConsistentWithCM
                                         : CMReport::Verdict::ViolationFound;
    return rep;
}

}  // namespace

CMReport cm_check(const JetProvider& target, const std::vector<double>& grid,
                  int order) {
    return build_cm_report(grid, order, [&](double x) {
        TaylorJet jet = target(x, order);
        std::vector<double> row(order + 1);
        for (int m = 0; m <= order; ++m) row[m] = jet.derivative(m);
        return row;
    });
}

CMReport cm_check_closed_c1(int n, const std::vector<double>& grid,
                            int order) {
    const ClosedFormC1R2& cf = ClosedFormC1R2::get(n);
    return build_cm_report(grid, order, [&](double x) {
        std::vector<double> row(order + 1);
        for (int m = 0; m <= order; ++m) row[m] = cf.derivative(m, x);
        return row;
    });
}

LogConvexReport logconvex_check(const JetProvider& target,
                                const std::vector<double>& grid, double tol) {
    LogConvexReport rep;
    for (double x : grid) {
        TaylorJet jet = target(x, 2);
        const double f = jet.coeff(0);
        if (!(f > 0.0))
            throw std::domain_error(
                "logconvex_check: non-positive function value");
        const double fp = jet.coeff(1);
        const double fpp = 2.0 * jet.coeff(2);
        LogConvexReport::Row row;
        row.x = x;
        row.value = f * fpp - fp * fp;
        row.bound = -tol * (f * std::fabs(fpp) + fp * fp);
        row.ok = row.value >= row.bound;
        rep.holds = rep.holds && row.ok;
        rep.rows.push_back(row);
    }
    return rep;
}

DecayReport decay_check(const JetProvider& target, int order,
                        const std::vector<double>& xs) {
    if (xs.empty()) throw std::domain_error("decay_check: empty grid");
    for (size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1]))
            throw std::domain_error("decay_check: grid must increase");

    DecayReport rep;
    rep.xs = xs;
    rep.magnitudes.assign(order + 1, {});
    for (double x : xs) {
        TaylorJet jet = target(x, order);
        for (int m = 0; m <= order; ++m)
            rep.magnitudes[m].push_back(std::fabs(jet.derivative(m)));
    }
    for (int m = 0; m <= order; ++m) {
        bool dec = true;
        for (size_t i = 1; i < xs.size(); ++i)
            dec = dec && rep.magnitudes[m][i] < rep.magnitudes[m][i - 1];
        rep.decreasing.push_back(dec);
        rep.last_value.push_back(rep.magnitudes[m].back());
    }
    return rep;
}

bool DecayReport::all_decreasing() const {
    return std::all_of(decreasing.begin(), decreasing.end(),
                       [](bool b) { return b; });
}

bool DecayReport::below(double tol_abs, int m_from) const {
    for (size_t m = static_cast<size_t>(m_from); m < last_value.size(); ++m)
        if (!(last_value[m] < tol_abs)) return false;
    return true;
}

std::vector<ConjectureEntry> conjecture_harness(
    const std::vector<double>& alphas, const std::vector<int>& rs,
    const std::vector<double>& grid, int order) {
    for (int r : rs)
        if (r < 2 || r % 2 != 0)
            throw std::invalid_argument("conjecture_harness: r must be even");
    std::vector<ConjectureEntry> out;
    for (double alpha : alphas) {
        for (int r : rs) {
            JetProvider prov = [alpha, r](double y, int ord) {
                return f_alpha_jet(alpha, r, y, ord);
            };
            CMReport rep = cm_check(prov, grid, order);
            ConjectureEntry e;
            e.alpha = alpha;
            e.r = r;
            e.verdict = rep.verdict;
            e.worst = rep.worst;
            e.indeterminate = static_cast<long>(rep.indeterminate.size());
            out.push_back(e);
        }
    }
    return out;
}

}  // namespace baskakov
