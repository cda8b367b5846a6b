#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "baskakov/hypergeom.hpp"

using namespace baskakov;

TEST_CASE("gauss series basics") {
    CHECK(gauss_2f1(0.3, 1.7, 2.2, 0.0) == 1.0);
    // frozen: 2F1(1/2,1/2;1;1/4) = (2/pi) K(1/2)
    CHECK(gauss_2f1(0.5, 0.5, 1.0, 0.25) ==
          doctest::Approx(1.07318200714936438).epsilon(1e-13));
    // Chu-Vandermonde at z = 1 for terminating series
    CHECK(gauss_2f1(-3.0, 2.0, 5.0, 1.0) ==
          doctest::Approx(2.0 / 7.0).epsilon(1e-14));
    // geometric special case 2F1(1,b;b;z) = 1/(1-z)
    CHECK(gauss_2f1(1.0, 2.5, 2.5, 0.6) ==
          doctest::Approx(2.5).epsilon(1e-13));
}

TEST_CASE("kernel polynomials: low orders exact") {
    RealPolynomial p1 = pn_polynomial(1);
    REQUIRE(p1.degree() == 1);
    CHECK(p1.coeffs[0] == 1);
    CHECK(p1.coeffs[1] == 1);

    RealPolynomial p2 = pn_polynomial(2);
    REQUIRE(p2.degree() == 2);
    CHECK(p2.coeffs[0] == 1);
    CHECK(p2.coeffs[1] == mpq_class(2, 3));
    CHECK(p2.coeffs[2] == 1);

    CHECK(pn_polynomial(0).degree() == 0);
}

TEST_CASE("kernel polynomials are positive and palindromic") {
    for (int n : {3, 7, 15, 30}) {
        RealPolynomial p = pn_polynomial(n);
        REQUIRE(p.degree() == n);
        for (int j = 0; j <= n; ++j) {
            CHECK(p.coeffs[j] > 0);
            CHECK(p.coeffs[j] == p.coeffs[n - j]);
        }
    }
}

TEST_CASE("polynomial values match the terminating gauss series") {
    for (int n : {1, 2, 5, 9}) {
        RealPolynomial p = pn_polynomial(n);
        for (double z : {-0.8, -0.2, 0.3, 0.9}) {
            CHECK(p.eval(z) ==
                  doctest::Approx(gauss_2f1(-n, 0.5, -n + 0.5, z))
                      .epsilon(1e-12));
        }
    }
}

TEST_CASE("bridge factor") {
    CHECK(bridge_factor(1) == 1);
    CHECK(bridge_factor(2) == mpq_class(1, 2));       // binom(1/2, 1)
    CHECK(bridge_factor(3) == mpq_class(3, 8));       // (3!!)/(4*2!) = 3/8
    CHECK(bridge_factor(4) == mpq_class(5, 16));
}

TEST_CASE("AGM elliptic integral") {
    CHECK(elliptic_K_agm(0.0) == doctest::Approx(M_PI / 2).epsilon(1e-15));
    CHECK(elliptic_K_agm(0.5) ==
          doctest::Approx(1.68575035481259604).epsilon(1e-14));
    CHECK(elliptic_K_agm(1.0 / std::sqrt(2.0)) ==
          doctest::Approx(1.85407467730137192).epsilon(1e-14));
    CHECK(elliptic_K_agm(0.75) ==
          doctest::Approx(1.91098978075182920).epsilon(1e-14));
    CHECK_THROWS(elliptic_K_agm(1.0));
    CHECK_THROWS(elliptic_K_agm(-0.1));
}

TEST_CASE("AGM vs series identity on a modulus sweep") {
    for (int i = 0; i <= 9; ++i) {
        const double k = 0.1 * i;
        const double lhs = elliptic_K_agm(k);
        const double rhs = M_PI / 2 * gauss_2f1(0.5, 0.5, 1.0, k * k);
        CHECK(std::fabs(lhs - rhs) <= 1e-11);
    }
}

TEST_CASE("elliptic profile spots") {
    CHECK(elliptic_cm_profile(0.0) == doctest::Approx(M_PI / 2).epsilon(1e-15));
    CHECK(elliptic_cm_profile(1.0) ==
          doctest::Approx(1.68575035481259604 / 2.0).epsilon(1e-14));
    CHECK(elliptic_cm_profile(3.0) ==
          doctest::Approx(0.477747445187957299).epsilon(1e-14));
}
