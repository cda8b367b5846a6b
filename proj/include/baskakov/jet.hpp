#pragma once

#include <vector>

namespace baskakov {

// Truncated power series f(center + eps) = sum_m coeffs[m] eps^m + O(eps^{M+1}).
// The m-th derivative at center is m! * coeffs[m]. Coefficients are carried in
// extended precision: the series-of-jets sums downstream cancel across many
// orders of magnitude at the top derivatives, and the checks need the digits
// that survive. Order is capped at 60; past that even the widened mantissa
// loses the sign information the monotonicity verdicts rest on.
class TaylorJet {
public:
    TaylorJet() = default;
    TaylorJet(double center, int order);  // zero jet

    static constexpr int kMaxOrder = 60;

    static TaylorJet constant(double v, double center, int order);
    static TaylorJet variable(double center, int order);  // center + eps

    int order() const { return static_cast<int>(c_.size()) - 1; }
    double center() const { return center_; }
    long double coeff(int m) const { return c_[m]; }
    long double& coeff(int m) { return c_[m]; }
    double derivative(int m) const;  // m! * c_m
    double value() const { return static_cast<double>(c_[0]); }

    TaylorJet operator+(const TaylorJet& o) const;
    TaylorJet operator-(const TaylorJet& o) const;
    TaylorJet operator*(const TaylorJet& o) const;
    TaylorJet operator*(long double s) const;
    TaylorJet operator+(long double s) const;

    // Multiply by eps^k (shift coefficients up, truncating at the order).
    TaylorJet shifted(int k) const;

private:
    double center_ = 0.0;
    std::vector<long double> c_;
};

TaylorJet jet_exp(const TaylorJet& a);
TaylorJet jet_log(const TaylorJet& a);                 // requires a(0) > 0
TaylorJet jet_pow(const TaylorJet& a, long double p);  // requires a(0) > 0
TaylorJet jet_recip(const TaylorJet& a);               // requires a(0) != 0

}  // namespace baskakov
