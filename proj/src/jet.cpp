#include "baskakov/jet.hpp"

#include <cmath>
#include <stdexcept>

namespace baskakov {

TaylorJet::TaylorJet(double center, int order) : center_(center) {
    if (order < 0 || order > kMaxOrder)
        throw std::domain_error("TaylorJet: order must lie in [0, 60]");
    c_.assign(order + 1, 0.0);
}

TaylorJet TaylorJet::constant(double v, double center, int order) {
    TaylorJet j(center, order);
    j.c_[0] = v;
    return j;
}

TaylorJet TaylorJet::variable(double center, int order) {
    TaylorJet j(center, order);
    j.c_[0] = center;
    if (order >= 1) j.c_[1] = 1.0;
    return j;
}

double TaylorJet::derivative(int m) const {
    if (m < 0 || m > order())
        throw std::domain_error("TaylorJet::derivative: order out of range");
    long double f = 1.0L;
    for (int i = 2; i <= m; ++i) f *= i;
    return static_cast<double>(f * c_[m]);
}

TaylorJet TaylorJet::operator+(const TaylorJet& o) const {
    TaylorJet r(center_, order());
    for (int m = 0; m <= order(); ++m) r.c_[m] = c_[m] + o.c_[m];
    return r;
}

TaylorJet TaylorJet::operator-(const TaylorJet& o) const {
    TaylorJet r(center_, order());
    for (int m = 0; m <= order(); ++m) r.c_[m] = c_[m] - o.c_[m];
    return r;
}

TaylorJet TaylorJet::operator*(const TaylorJet& o) const {
    TaylorJet r(center_, order());
    const int M = order();
    for (int m = 0; m <= M; ++m) {
        long double acc = 0.0L;
        for (int j = 0; j <= m; ++j) acc += c_[j] * o.c_[m - j];
        r.c_[m] = acc;
    }
    return r;
}

TaylorJet TaylorJet::operator*(long double s) const {
    TaylorJet r(center_, order());
    for (int m = 0; m <= order(); ++m) r.c_[m] = c_[m] * s;
    return r;
}

TaylorJet TaylorJet::operator+(long double s) const {
    TaylorJet r = *this;
    r.c_[0] += s;
    return r;
}

TaylorJet TaylorJet::shifted(int k) const {
    TaylorJet r(center_, order());
    for (int m = order(); m >= k; --m) r.c_[m] = c_[m - k];
    return r;
}

TaylorJet jet_exp(const TaylorJet& a) {
    const int M = a.order();
    TaylorJet e(a.center(), M);
    e.coeff(0) = std::exp(a.coeff(0));
    for (int m = 1; m <= M; ++m) {
        long double acc = 0.0L;
        for (int j = 1; j <= m; ++j) acc += j * a.coeff(j) * e.coeff(m - j);
        e.coeff(m) = acc / m;
    }
    return e;
}

TaylorJet jet_log(const TaylorJet& a) {
    if (a.coeff(0) <= 0.0)
        throw std::domain_error("jet_log: requires positive leading coefficient");
    const int M = a.order();
    TaylorJet l(a.center(), M);
    l.coeff(0) = std::log(a.coeff(0));
    for (int m = 1; m <= M; ++m) {
        long double acc = m * a.coeff(m);
        for (int j = 1; j < m; ++j) acc -= j * l.coeff(j) * a.coeff(m - j);
        l.coeff(m) = acc / (m * a.coeff(0));
    }
    return l;
}

TaylorJet jet_pow(const TaylorJet& a, long double p) {
    if (a.coeff(0) <= 0.0)
        throw std::domain_error("jet_pow: requires positive leading coefficient");
    const int M = a.order();
    TaylorJet b(a.center(), M);
    b.coeff(0) = std::pow(a.coeff(0), p);
    // Miller recurrence from a b' p = b a' p-form: m b_m a_0 =
    // sum_{k=1..m} (k(p+1) - m) a_k b_{m-k}.
    for (int m = 1; m <= M; ++m) {
        long double acc = 0.0L;
        for (int k = 1; k <= m; ++k)
            acc += (k * (p + 1.0L) - m) * a.coeff(k) * b.coeff(m - k);
        b.coeff(m) = acc / (m * a.coeff(0));
    }
    return b;
}

TaylorJet jet_recip(const TaylorJet& a) {
    if (a.coeff(0) == 0.0)
        throw std::domain_error("jet_recip: leading coefficient is zero");
    const int M = a.order();
    TaylorJet r(a.center(), M);
    r.coeff(0) = 1.0L / a.coeff(0);
    for (int m = 1; m <= M; ++m) {
        long double acc = 0.0L;
        for (int j = 1; j <= m; ++j) acc += a.coeff(j) * r.coeff(m - j);
        r.coeff(m) = -acc / a.coeff(0);
    }
    return r;
}

}  // namespace baskakov
