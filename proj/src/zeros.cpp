#include "baskakov/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "baskakov/closed_form.hpp"

namespace baskakov {

namespace {

using Complex = std::complex<double>;

// Horner value and derivative. The coefficient additions are compensated:
// the exact rounding error of each fl(p*z + a_j) addition (TwoSum; the
// coefficients are real) is carried in e, which follows the same recurrence
// e <- e*z + delta and is folded back at the end.
void horner2(const std::vector<double>& a, Complex z, Complex& p,
             Complex& dp) {
    const int deg = static_cast<int>(a.size()) - 1;
    p = Complex(a[deg], 0.0);
    dp = Complex(0.0, 0.0);
    Complex e(0.0, 0.0);
    for (int j = deg - 1; j >= 0; --j) {
        dp = dp * z + p;
        const Complex t = p * z;
        const double s = t.real() + a[j];
        const double bb = s - t.real();
        const double delta = (t.real() - (s - bb)) + (a[j] - bb);
        e = e * z + Complex(delta, 0.0);
        p = Complex(s, t.imag());
    }
    p += e;
}

Complex poly_value(const std::vector<double>& a, Complex z) {
    Complex p, dp;
    horner2(a, z, p, dp);
    return p;
}

void sort_by_re_im(std::vector<Complex>& v) {
    std::sort(v.begin(), v.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

}  // namespace

ZeroSet find_roots(const RealPolynomial& poly, double residual_tol) {
    std::vector<double> a = poly.to_double();
    while (a.size() > 1 && a.back() == 0.0) a.pop_back();
    const int deg = static_cast<int>(a.size()) - 1;
    if (deg < 1) throw std::invalid_argument("find_roots: degree must be >= 1");

    // Max-norm prescale keeps Horner in a friendly range; roots unchanged.
    double amax = 0.0;
    for (double v : a) amax = std::max(amax, std::fabs(v));
    std::vector<double> as(a.size());
    for (size_t j = 0; j < a.size(); ++j) as[j] = a[j] / amax;

    double ratio_max = 0.0;
    for (int j = 0; j < deg; ++j)
        ratio_max = std::max(ratio_max, std::fabs(as[j] / as[deg]));
    const double r0 = std::sqrt(1.0 + ratio_max);

    std::vector<Complex> z(deg);
    for (int i = 0; i < deg; ++i) {
        const double th = 2.0 * M_PI * i / deg + 0.3799;
        z[i] = Complex(r0 * std::cos(th), r0 * std::sin(th));
    }

    double scale_s = 0.0;
    for (double v : as) scale_s += std::fabs(v);
    const double res_cut = residual_tol * scale_s;

    ZeroSet out;
    std::vector<Complex> znew(deg);
    int sweep = 0;
    for (; sweep < 500; ++sweep) {
        double res_max = 0.0;
        for (int i = 0; i < deg; ++i) {
            Complex p, dp;
            horner2(as, z[i], p, dp);
            res_max = std::max(res_max, std::abs(p));
            Complex w;
            if (dp == Complex(0.0, 0.0))
                w = Complex(1e-8, 1e-8);
            else
                w = p / dp;
            Complex s(0.0, 0.0);
            for (int j = 0; j < deg; ++j) {
                if (j == i) continue;
                const Complex d = z[i] - z[j];
                if (d == Complex(0.0, 0.0)) continue;
                s += 1.0 / d;
            }
            const Complex den = 1.0 - w * s;
            znew[i] = (den == Complex(0.0, 0.0)) ? z[i] - w : z[i] - w / den;
        }
        double step_max = 0.0;
        for (int i = 0; i < deg; ++i)
            step_max =
                std::max(step_max, std::abs(znew[i] - z[i]) /
                                       (1.0 + std::abs(znew[i])));
        z = znew;
        if (res_max <= res_cut && step_max < 1e-14) break;
    }

    sort_by_re_im(z);
    out.roots = z;
    out.iterations = sweep + 1;
    double coeff_scale = 0.0;
    for (double v : a) coeff_scale += std::fabs(v);
    bool ok = true;
    out.residuals.reserve(deg);
    for (int i = 0; i < deg; ++i) {
        const double res = std::abs(poly_value(a, z[i]));
        out.residuals.push_back(res);
        ok = ok && res <= residual_tol * coeff_scale;
    }
    out.converged = ok;
    return out;
}

ZeroSet psi_zeros(int n, double residual_tol) {
    if (n < 2) throw std::invalid_argument("psi_zeros: need n >= 2");
    const ZeroSet kernel = find_roots(pn_polynomial(n - 1), 1e-12);

    ZeroSet out;
    out.iterations = kernel.iterations;
    out.roots.reserve(2 * (n - 1));
    for (const Complex& z : kernel.roots) {
        const Complex w = std::sqrt(1.0 / z);
        out.roots.push_back((w - 1.0) / 2.0);
        out.roots.push_back((-w - 1.0) / 2.0);
    }
    sort_by_re_im(out.roots);

    const ClosedFormC1R2& cf = ClosedFormC1R2::get(n);
    bool ok = kernel.converged;
    out.residuals.reserve(out.roots.size());
    for (const Complex& x : out.roots) {
        const double rel = std::abs(cf.eval(x)) / cf.scale_at(x);
        out.residuals.push_back(rel);
        ok = ok && rel <= residual_tol;
    }
    out.converged = ok;
    return out;
}

MeasureStats measure_stats(const ZeroSet& zs,
                           const std::vector<double>& test_radii) {
    if (zs.roots.empty())
        throw std::invalid_argument("measure_stats: empty zero set");
    for (double r : test_radii)
        if (!(r > 1.0))
            throw std::invalid_argument("measure_stats: radii must exceed 1");

    const size_t n = zs.roots.size();
    MeasureStats st;
    double dev_sum = 0.0;
    std::vector<double> u;
    u.reserve(n);
    for (const Complex& z : zs.roots) {
        const double dev = std::fabs(std::abs(z) - 1.0);
        st.radial_dev_max = std::max(st.radial_dev_max, dev);
        dev_sum += dev;
        double frac = std::arg(z) / (2.0 * M_PI);
        frac -= std::floor(frac);
        u.push_back(frac);
    }
    st.radial_dev_mean = dev_sum / static_cast<double>(n);

    std::sort(u.begin(), u.end());
    for (size_t i = 0; i < n; ++i) {
        const double lo = static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n;
        st.angular_ks = std::max(st.angular_ks, std::max(hi - u[i], u[i] - lo));
    }

    for (double r : test_radii) {
        for (int j = 0; j < 8; ++j) {
            const double th = 2.0 * M_PI * j / 8.0;
            const Complex pt(r * std::cos(th), r * std::sin(th));
            double acc = 0.0;
            for (const Complex& z : zs.roots) acc += std::log(std::abs(pt - z));
            const double err =
                std::fabs(-acc / static_cast<double>(n) + std::log(r));
            st.potential_errors.emplace_back(pt, err);
            st.potential_err_max = std::max(st.potential_err_max, err);
        }
    }
    return st;
}

MeasureStats psi_measure_stats(const ZeroSet& xs,
                               const std::vector<double>& test_radii) {
    ZeroSet mapped;
    mapped.converged = xs.converged;
    mapped.iterations = xs.iterations;
    mapped.roots.reserve(xs.roots.size());
    for (const Complex& x : xs.roots) mapped.roots.push_back(2.0 * x + 1.0);
    return measure_stats(mapped, test_radii);
}

}  // namespace baskakov
