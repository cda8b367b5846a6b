#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "baskakov/basis.hpp"
#include "baskakov/kahan.hpp"

using namespace baskakov;

TEST_CASE("geometric special case c=1, n=1") {
    // p_{1,k}(1) = 2^{-k-1}
    BaskakovParams p{1, 1.0, 1};
    for (long k = 0; k <= 8; ++k)
        CHECK(basis_value(p, k, 1.0) ==
              doctest::Approx(std::pow(2.0, -static_cast<double>(k) - 1))
                  .epsilon(1e-14));
}

TEST_CASE("partition of unity under truncation") {
    for (double c : {0.5, 1.0, 2.0}) {
        for (double x : {0.1, 1.0, 2.0}) {
            BaskakovParams p{3, c, 1};
            KahanSum s;
            for (long k = 0; k <= 400; ++k) s.add(basis_value(p, k, x));
            CHECK(s.value() == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("x = 0 concentrates on k = 0") {
    BaskakovParams p{4, 0.5, 1};
    CHECK(basis_value(p, 0, 0.0) == 1.0);
    CHECK(basis_value(p, 1, 0.0) == 0.0);
    CHECK(basis_value(p, 7, 0.0) == 0.0);
}

TEST_CASE("values stay in [0, 1]") {
    BaskakovParams p{5, 2.0, 1};
    for (long k = 0; k <= 50; ++k) {
        const double v = basis_value(p, k, 3.0);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
}

TEST_CASE("small c approaches the Szasz weights") {
    BaskakovParams p{2, 1e-8, 1};
    for (long k : {0L, 1L, 3L, 6L}) {
        const double b = basis_value(p, k, 1.5);
        const double s = szasz_basis_value(2, k, 1.5);
        CHECK(b == doctest::Approx(s).epsilon(1e-6));
    }
}

TEST_CASE("szasz weights are Poisson masses") {
    // e^{-nx}(nx)^k/k! at n=1, x=2
    const double y = 2.0;
    double expect = std::exp(-y);
    for (long k = 0; k <= 6; ++k) {
        CHECK(szasz_basis_value(1, k, 2.0) ==
              doctest::Approx(expect).epsilon(1e-14));
        expect *= y / static_cast<double>(k + 1);
    }
}

TEST_CASE("log form matches the exponentiated value") {
    BaskakovParams p{3, 2.0, 1};
    for (long k : {0L, 2L, 9L}) {
        const LogSignedValue lv = basis_log_value(p, k, 0.7);
        CHECK(lv.sign == 1);
        CHECK(std::exp(lv.log_magnitude) ==
              doctest::Approx(basis_value(p, k, 0.7)).epsilon(1e-14));
    }
}

TEST_CASE("domain errors") {
    BaskakovParams p{2, 1.0, 1};
    CHECK_THROWS_AS(basis_value(p, 0, -0.5), std::domain_error);
    CHECK_THROWS_AS(basis_value(p, -1, 0.5), std::domain_error);
    BaskakovParams szasz{2, 0.0, 1};
    CHECK_THROWS_AS(basis_value(szasz, 0, 0.5), std::domain_error);
    BaskakovParams bad{0, 1.0, 1};
    CHECK_THROWS_AS(basis_value(bad, 0, 0.5), std::domain_error);
}
