#include "baskakov/gruss.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "baskakov/kahan.hpp"

namespace baskakov {

namespace {

constexpr double kMassTol = 1e-12;

double weight(const BaskakovParams& p, long k, double x) {
    if (p.c > 0.0) return basis_value(p, k, x);
    return szasz_basis_value(p.n, k, x);
}

}  // namespace

GrussReport gruss_verify(const BaskakovParams& p, double x,
                         const std::function<double(long)>& f_samples,
                         const std::function<double(long)>& g_samples,
                         long k_trunc, double tol) {
    if (!p.valid() || x < 0.0)
        throw std::domain_error("gruss_verify: invalid parameters");

    std::vector<double> w;
    KahanSum mass;
    if (k_trunc >= 0) {
        w.reserve(k_trunc + 1);
        for (long k = 0; k <= k_trunc; ++k) {
            w.push_back(weight(p, k, x));
            mass.add(w.back());
        }
    } else {
        // Extend until the tail mass is certifiably negligible. Weights are
        // unimodal in k with mean n*x, so "past the mean and mass nearly
        // complete" is a safe stop.
        const double peak_k = static_cast<double>(p.n) * x;
        for (long k = 0; k <= kSeriesCap; ++k) {
            w.push_back(weight(p, k, x));
            mass.add(w.back());
            if (k > peak_k && mass.value() >= 1.0 - 0.5 * kMassTol) break;
        }
    }
    if (mass.value() < 1.0 - kMassTol)
        throw std::runtime_error(
            "gruss_verify: truncated weight mass below 1 - 1e-12");

    const long K = static_cast<long>(w.size()) - 1;
    KahanSum lf, lg, lfg, sq;
    double fmin = f_samples(0), fmax = fmin;
    double gmin = g_samples(0), gmax = gmin;
    for (long k = 0; k <= K; ++k) {
        const double fv = f_samples(k);
        const double gv = g_samples(k);
        lf.add(w[k] * fv);
        lg.add(w[k] * gv);
        lfg.add(w[k] * fv * gv);
        sq.add(w[k] * w[k]);
        fmin = std::min(fmin, fv);
        fmax = std::max(fmax, fv);
        gmin = std::min(gmin, gv);
        gmax = std::max(gmax, gv);
    }

    GrussReport rep;
    rep.x = x;
    rep.lhs = std::fabs(lfg.value() - lf.value() * lg.value());
    rep.sum_sq = sq.value();
    rep.osc_f = fmax - fmin;
    rep.osc_g = gmax - gmin;
    rep.bound_tight = 0.5 * (1.0 - rep.sum_sq) * rep.osc_f * rep.osc_g;
    rep.bound_simple = 0.5 * rep.osc_f * rep.osc_g;
    rep.holds_tight = rep.lhs <= rep.bound_tight + tol;
    rep.holds_simple = rep.lhs <= rep.bound_simple + tol;
    rep.k_trunc = K;
    rep.weight_mass = mass.value();
    return rep;
}

}  // namespace baskakov
