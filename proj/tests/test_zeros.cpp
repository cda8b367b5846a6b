#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "baskakov/hypergeom.hpp"
#include "baskakov/zeros.hpp"

using namespace baskakov;
using cpx = std::complex<double>;

namespace {

double coeff_abs_sum(const RealPolynomial& poly) {
    double s = 0.0;
    for (double a : poly.to_double()) s += std::fabs(a);
    return s;
}

// Distance from each root to its nearest conjugated partner.
double conjugate_pairing_gap(const std::vector<cpx>& roots) {
    double worst = 0.0;
    for (const cpx& z : roots) {
        double best = 1e300;
        for (const cpx& w : roots)
            best = std::min(best, std::abs(std::conj(w) - z));
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace

TEST_CASE("small kernel polynomials have the expected roots") {
    ZeroSet z1 = find_roots(pn_polynomial(1), 1e-12);
    REQUIRE(z1.roots.size() == 1);
    CHECK(z1.converged);
    CHECK(std::abs(z1.roots[0] - cpx(-1.0, 0.0)) < 1e-14);

    ZeroSet z2 = find_roots(pn_polynomial(2), 1e-12);
    REQUIRE(z2.roots.size() == 2);
    CHECK(z2.converged);
    const double im = 2.0 * std::sqrt(2.0) / 3.0;
    CHECK(std::abs(z2.roots[0] - cpx(-1.0 / 3.0, -im)) < 1e-13);
    CHECK(std::abs(z2.roots[1] - cpx(-1.0 / 3.0, im)) < 1e-13);
    for (const cpx& z : z2.roots)
        CHECK(std::fabs(std::abs(z) - 1.0) < 1e-14);
}

TEST_CASE("root residuals stay small as the degree grows") {
    for (int n : {5, 20, 60, 100}) {
        RealPolynomial poly = pn_polynomial(n);
        ZeroSet zs = find_roots(poly, 1e-10);
        REQUIRE(static_cast<int>(zs.roots.size()) == n);
        CHECK(zs.converged);
        const double scale = coeff_abs_sum(poly);
        for (double r : zs.residuals) CHECK(r <= 1e-10 * scale);
    }
}

TEST_CASE("roots agree with an eigenvalue solver on the companion matrix") {
    for (int n : {5, 12, 20}) {
        RealPolynomial poly = pn_polynomial(n);
        std::vector<double> a = poly.to_double();
        const int d = poly.degree();
        Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
        for (int i = 0; i + 1 < d; ++i) comp(i + 1, i) = 1.0;
        for (int i = 0; i < d; ++i) comp(i, d - 1) = -a[i] / a[d];
        Eigen::EigenSolver<Eigen::MatrixXd> solver(comp);
        REQUIRE(solver.info() == Eigen::Success);

        ZeroSet zs = find_roots(poly, 1e-10);
        for (int i = 0; i < d; ++i) {
            const cpx ev(solver.eigenvalues()[i].real(),
                         solver.eigenvalues()[i].imag());
            double best = 1e300;
            for (const cpx& z : zs.roots)
                best = std::min(best, std::abs(z - ev));
            CHECK(best < 1e-8);
        }
    }
}

TEST_CASE("power sum zeros: count, location, symmetry") {
    ZeroSet z2 = psi_zeros(2);
    REQUIRE(z2.roots.size() == 2);
    CHECK(z2.converged);
    CHECK(std::abs(z2.roots[0] - cpx(-0.5, -0.5)) < 1e-12);
    CHECK(std::abs(z2.roots[1] - cpx(-0.5, 0.5)) < 1e-12);

    for (int n : {2, 5, 13, 30}) {
        ZeroSet zs = psi_zeros(n);
        CHECK(static_cast<int>(zs.roots.size()) == 2 * (n - 1));
        CHECK(zs.converged);
        for (const cpx& x : zs.roots) CHECK(std::fabs(x.imag()) > 1e-6);
        CHECK(conjugate_pairing_gap(zs.roots) < 1e-12);
    }
    for (int n : {40, 60}) {
        ZeroSet zs = psi_zeros(n);
        CHECK(zs.converged);
        for (double r : zs.residuals) CHECK(r <= 1e-8);
    }
}

TEST_CASE("measure statistics on exact configurations") {
    ZeroSet z2 = find_roots(pn_polynomial(2), 1e-12);
    MeasureStats st2 = measure_stats(z2, {2.0});
    CHECK(st2.radial_dev_max < 1e-13);
    CHECK(st2.radial_dev_mean < 1e-13);

    // Single root at -1, test circle of radius 2 anchored at angle 0:
    // the first test point is z = 2 and the error is |log 2 - log 3|.
    ZeroSet z1 = find_roots(pn_polynomial(1), 1e-12);
    MeasureStats st1 = measure_stats(z1, {2.0});
    REQUIRE(st1.potential_errors.size() == 8);
    CHECK(st1.potential_errors[0].first.real() == doctest::Approx(2.0));
    CHECK(st1.potential_errors[0].first.imag() == doctest::Approx(0.0));
    CHECK(st1.potential_errors[0].second ==
          doctest::Approx(std::log(1.5)).epsilon(1e-12));

    // Roots of unity: the KS distance is 1/n plain, 1/(2n) mid-rotated.
    const int n = 8;
    ZeroSet plain, rotated;
    for (int j = 0; j < n; ++j) {
        const double t0 = 2.0 * std::numbers::pi * j / n;
        const double t1 = 2.0 * std::numbers::pi * (j + 0.5) / n;
        plain.roots.emplace_back(std::cos(t0), std::sin(t0));
        rotated.roots.emplace_back(std::cos(t1), std::sin(t1));
    }
    CHECK(measure_stats(plain, {2.0}).angular_ks ==
          doctest::Approx(1.0 / n).epsilon(1e-12));
    CHECK(measure_stats(rotated, {2.0}).angular_ks ==
          doctest::Approx(0.5 / n).epsilon(1e-12));
    CHECK(measure_stats(plain, {2.0}).radial_dev_max < 1e-13);

    CHECK_THROWS_AS(measure_stats(plain, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(measure_stats(ZeroSet{}, {2.0}), std::invalid_argument);
}

TEST_CASE("power sum zeros in the mapped plane") {
    // n = 2: x = (-1 +- i)/2 maps to z = 2x + 1 = +-i, exactly unit modulus.
    MeasureStats st = psi_measure_stats(psi_zeros(2), {2.0});
    CHECK(st.radial_dev_max < 1e-12);
    CHECK(st.angular_ks == doctest::Approx(0.25).epsilon(1e-10));

    // Larger n: the mapped zeros sit on the unit circle to rounding error
    // and equidistribute as n grows.
    MeasureStats big = psi_measure_stats(psi_zeros(40), {2.0});
    CHECK(big.radial_dev_max < 1e-12);
    CHECK(big.angular_ks < 0.05);
    CHECK(big.potential_err_max < 0.02);
}
