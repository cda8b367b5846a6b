#include "baskakov/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>

#include "baskakov/kahan.hpp"

namespace baskakov {

namespace {

// Implicit-shift QL for a symmetric tridiagonal matrix. d is the diagonal,
// e the subdiagonal (e[i] couples rows i and i+1), z an arbitrary vector
// rotated along; on return d holds eigenvalues (unsorted) and z the
// corresponding components of the rotated input vector.
void imtqlx(std::vector<double>& d, std::vector<double>& e,
            std::vector<double>& z) {
    const int n = static_cast<int>(d.size());
    if (n <= 1) return;
    e.resize(n, 0.0);
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        while (true) {
            int m = l;
            for (; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd)
                    break;
            }
            if (m == l) break;
            if (++iter > 60)
                throw std::runtime_error("imtqlx: QL iteration did not converge");
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (int i = m - 1; i >= l; --i) {
                double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}

int env_thread_count() {
    const char* v = std::getenv("BASKAKOV_THREADS");
    if (!v) return 1;
    const int t = std::atoi(v);
    return t >= 1 ? t : 1;
}

}  // namespace

const GaussLaguerre& gauss_laguerre(double alpha, int n) {
    if (alpha <= 0.0) throw std::domain_error("gauss_laguerre: alpha must be positive");
    if (n < 1) throw std::domain_error("gauss_laguerre: n must be >= 1");
    static std::map<std::pair<double, int>, GaussLaguerre> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(alpha, n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    // Jacobi matrix of the generalized Laguerre weight: diagonal 2i + alpha,
    // subdiagonal sqrt((i+1)(i+alpha)).
    std::vector<double> d(n), e(n, 0.0), z(n, 0.0);
    for (int i = 0; i < n; ++i) d[i] = 2.0 * i + alpha;
    for (int i = 0; i + 1 < n; ++i)
        e[i] = std::sqrt((i + 1.0) * (i + alpha));
    z[0] = 1.0;
    imtqlx(d, e, z);

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });

    GaussLaguerre gl;
    gl.alpha = alpha;
    gl.nodes.reserve(n);
    gl.weights.reserve(n);
    gl.weights_norm.reserve(n);
    const double lg = std::lgamma(alpha);
    for (int i : idx) {
        gl.nodes.push_back(d[i]);
        gl.weights_norm.push_back(z[i] * z[i]);
        gl.weights.push_back(std::exp(lg + 2.0 * std::log(std::abs(z[i]))));
    }
    auto [pos, inserted] = cache.emplace(key, std::move(gl));
    (void)inserted;
    return pos->second;
}

double laplace_triple(double alpha, double x, const QuadratureSpec& spec) {
    if (!spec.valid()) throw std::invalid_argument("laplace_triple: spec out of range");
    if (alpha <= 0.0) throw std::domain_error("laplace_triple: alpha must be positive");
    if (x < 0.0) throw std::domain_error("laplace_triple: requires x >= 0");

    const GaussLaguerre& gl = gauss_laguerre(alpha, spec.radial_nodes);
    const int N = spec.radial_nodes;
    const int M = spec.angular_nodes;
    std::vector<double> ct(M);
    for (int m = 0; m < M; ++m) ct[m] = std::cos((m + 0.5) * M_PI / M);
    std::vector<double> sq(N);
    for (int i = 0; i < N; ++i) sq[i] = std::sqrt(gl.nodes[i]);

    KahanSum total;
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            const double a = gl.nodes[i] + gl.nodes[j];
            const double b = 2.0 * sq[i] * sq[j];
            KahanSum inner;
            for (int m = 0; m < M; ++m)
                inner.add(std::exp(-x * (a + b * ct[m])));
            total.add(gl.weights_norm[i] * gl.weights_norm[j] * inner.value());
        }
    }
    return total.value() / M;
}

double parseval_integral(int n, double x, int angular_nodes) {
    if (n < 1) throw std::domain_error("parseval_integral: requires n >= 1");
    if (x < 0.0) throw std::domain_error("parseval_integral: requires x >= 0");
    if (angular_nodes < 1)
        throw std::domain_error("parseval_integral: requires angular_nodes >= 1");
    const int M = angular_nodes;
    const double coef = 4.0 * x * (1.0 + x);
    KahanSum sum;
    for (int j = 0; j < M; ++j) {
        const double s = std::sin((j + 0.5) * M_PI / (2.0 * M));
        sum.add(std::pow(1.0 + coef * s * s, -static_cast<double>(n)));
    }
    return sum.value() / M;
}

namespace {

struct MultiAccum {
    KahanSum re, im;
    double min_re_g = std::numeric_limits<double>::infinity();
};

// Sums the radial combos whose leading index lies in [i_begin, i_end).
// The angular sum is factored exactly: with z_m = e^{-x(S/r + P e^{i phi_m})}
// and B_s = e^{-x(S/r + P e^{-i psi_s})}, the (r-1)-fold angular tensor sum
// collapses to a cyclic convolution over the residue s = sum m_j mod M,
// because psi depends on the angles only through their sum modulo 2 pi.
// Each factor has |.| <= 1 since S/r >= P by AM-GM, so nothing overflows.
void multi_worker(const GaussLaguerre& gl, int r, double x, int M,
                  const std::vector<double>& cphi, const std::vector<double>& sphi,
                  const std::vector<double>& cpsi, const std::vector<double>& spsi,
                  double min_h, int i_begin, int i_end, MultiAccum& acc) {
    const int N = static_cast<int>(gl.nodes.size());
    std::vector<double> logn(N);
    for (int i = 0; i < N; ++i) logn[i] = std::log(gl.nodes[i]);

    std::vector<std::complex<double>> zt(M), bt(M), conv(M), next(M);
    std::vector<int> idx(r, 0);

    for (int i0 = i_begin; i0 < i_end; ++i0) {
        idx.assign(r, 0);
        idx[0] = i0;
        while (true) {
            double sum_t = 0.0, sum_log = 0.0, wprod = 1.0;
            for (int j = 0; j < r; ++j) {
                sum_t += gl.nodes[idx[j]];
                sum_log += logn[idx[j]];
                wprod *= gl.weights_norm[idx[j]];
            }
            const double p = std::exp(sum_log / r);
            const double xp = x * p;
            const double damp = x * sum_t / r;
            acc.min_re_g = std::min(acc.min_re_g, sum_t + p * min_h);

            for (int m = 0; m < M; ++m) {
                const double mag = std::exp(-damp - xp * cphi[m]);
                zt[m] = std::polar(mag, -xp * sphi[m]);
            }
            for (int s = 0; s < M; ++s) {
                const double mag = std::exp(-damp - xp * cpsi[s]);
                bt[s] = std::polar(mag, xp * spsi[s]);
            }
            conv = zt;
            for (int fold = 0; fold < r - 2; ++fold) {
                for (int s = 0; s < M; ++s) {
                    std::complex<double> cs = 0.0;
                    for (int m = 0; m < M; ++m) {
                        int k = s - m;
                        if (k < 0) k += M;
                        cs += conv[k] * zt[m];
                    }
                    next[s] = cs;
                }
                conv.swap(next);
            }
            std::complex<double> ssum = 0.0;
            for (int s = 0; s < M; ++s) ssum += conv[s] * bt[s];
            const double scale = wprod / std::pow(static_cast<double>(M), r - 1);
            acc.re.add(scale * ssum.real());
            acc.im.add(scale * ssum.imag());

            int j = r - 1;
            while (j >= 1 && ++idx[j] == N) idx[j--] = 0;
            if (j == 0) break;
        }
    }
}

}  // namespace

MultiResult laplace_multi_full(double alpha, int r, double x,
                               const QuadratureSpec& spec) {
    if (r < 2 || r > 4) throw std::domain_error("laplace_multi: requires 2 <= r <= 4");
    if (!spec.valid()) throw std::invalid_argument("laplace_multi: spec out of range");
    if (alpha <= 0.0) throw std::domain_error("laplace_multi: alpha must be positive");
    if (x < 0.0) throw std::domain_error("laplace_multi: requires x >= 0");

    const int N = spec.radial_nodes;
    const int M = spec.angular_nodes;
    const double cost =
        std::pow(static_cast<double>(N), r) * std::pow(static_cast<double>(M), r - 1);
    if (cost > 1e9)
        throw std::invalid_argument(
            "laplace_multi: radial^r * angular^(r-1) exceeds the 1e9 evaluation cap");

    const GaussLaguerre& gl = gauss_laguerre(alpha, N);

    std::vector<double> cphi(M), sphi(M), cpsi(M), spsi(M);
    for (int m = 0; m < M; ++m) {
        const double phi = -M_PI + (m + 0.5) * 2.0 * M_PI / M;
        cphi[m] = std::cos(phi);
        sphi[m] = std::sin(phi);
    }
    for (int s = 0; s < M; ++s) {
        const double psi = -(r - 1) * M_PI + (s + 0.5 * (r - 1)) * 2.0 * M_PI / M;
        cpsi[s] = std::cos(psi);
        spsi[s] = std::sin(psi);
    }

    // Exact minimum over the angular grid of sum_j cos phi_{m_j} + cos psi_s,
    // by dynamic programming over the residue s of sum m_j mod M.
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dp(M, inf), dq(M, inf);
    dp[0] = 0.0;
    for (int fold = 0; fold < r - 1; ++fold) {
        std::fill(dq.begin(), dq.end(), inf);
        for (int s = 0; s < M; ++s) {
            if (dp[s] == inf) continue;
            for (int m = 0; m < M; ++m)
                dq[(s + m) % M] = std::min(dq[(s + m) % M], dp[s] + cphi[m]);
        }
        dp.swap(dq);
    }
    double min_h = inf;
    for (int s = 0; s < M; ++s) min_h = std::min(min_h, dp[s] + cpsi[s]);

    const int threads = std::min(env_thread_count(), N);
    std::vector<MultiAccum> parts(threads);
    if (threads == 1) {
        multi_worker(gl, r, x, M, cphi, sphi, cpsi, spsi, min_h, 0, N, parts[0]);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (N + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const int b = t * chunk;
            const int e = std::min(N, b + chunk);
            if (b >= e) break;
            pool.emplace_back(multi_worker, std::cref(gl), r, x, M, std::cref(cphi),
                              std::cref(sphi), std::cref(cpsi), std::cref(spsi),
                              min_h, b, e, std::ref(parts[t]));
        }
        for (auto& th : pool) th.join();
    }

    KahanSum re, im;
    double min_re_g = inf;
    for (const auto& part : parts) {
        re.add(part.re.value());
        im.add(part.im.value());
        min_re_g = std::min(min_re_g, part.min_re_g);
    }

    MultiResult out;
    out.value = re.value();
    out.imag_residual =
        std::abs(im.value()) / std::max(std::abs(re.value()), 1e-300);
    out.min_re_g = min_re_g;
    out.cost = cost;
    return out;
}

double laplace_multi(double alpha, int r, double x, const QuadratureSpec& spec) {
    return laplace_multi_full(alpha, r, x, spec).value;
}

}  // namespace baskakov
