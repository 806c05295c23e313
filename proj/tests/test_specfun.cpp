#include <doctest.h>

#include "helmscatter/specfun.hpp"

using namespace helm;

TEST_CASE("real Bessel wrappers satisfy the Wronskian") {
    for (double x : {0.3, 1.0, 4.0, 11.0, 30.0}) {
        for (int n : {0, 1, 3, 7}) {
            const double jp = 0.5 * (bessel_jn(n - 1, x) - bessel_jn(n + 1, x));
            const double yp = 0.5 * (bessel_yn(n - 1, x) - bessel_yn(n + 1, x));
            const double w = bessel_jn(n, x) * yp - jp * bessel_yn(n, x);
            CHECK(w == doctest::Approx(2.0 / (M_PI * x)).epsilon(1e-12));
        }
    }
}

TEST_CASE("domain errors for nonpositive arguments") {
    CHECK_THROWS_AS(bessel_y0(0.0), DomainError);
    CHECK_THROWS_AS(bessel_y1(-2.0), DomainError);
    CHECK_THROWS_AS(hankel1_0(Complex(0.0, 0.0)), DomainError);
    CHECK_THROWS_AS(hankel1_n(3, Complex(0.0, 0.0)), DomainError);
}

TEST_CASE("complex Hankel agrees with the real-axis reference") {
    for (double x = 0.05; x < 60.0; x *= 1.17) {
        const Complex h0 = hankel1_0(Complex(x, 0.0));
        const Complex h1 = hankel1_1(Complex(x, 0.0));
        CHECK(std::abs(h0 - Complex(bessel_j0(x), bessel_y0(x))) < 2e-11);
        CHECK(std::abs(h1 - Complex(bessel_j1(x), bessel_y1(x))) < 2e-11);
    }
}

TEST_CASE("complex-argument Wronskian J1 H0 - J0 H1 = 2i/(pi z)") {
    // covers both the series and asymptotic regimes, on and off the axis
    for (double re : {0.5, 3.0, 9.0, 13.0, 14.0, 25.0, 80.0, 300.0}) {
        for (double im : {0.0, 0.4, 2.5, 6.0}) {
            const Complex z(re, im);
            const Complex w = besselj_c1(z) * hankel1_0(z) -
                              besselj_c0(z) * hankel1_1(z);
            const Complex exact = 2.0 * I / (M_PI * z);
            CHECK(std::abs(w - exact) / std::abs(exact) < 1e-9);
        }
    }
}

TEST_CASE("hankel1_n matches the reference and the recurrence") {
    const double x = 30.0;
    for (int n = 0; n <= 20; ++n) {
        const Complex ref(bessel_jn(n, x), bessel_yn(n, x));
        CHECK(std::abs(hankel1_n(n, Complex(x, 0.0)) - ref) < 1e-11);
    }
    // negative orders
    CHECK(std::abs(hankel1_n(-3, Complex(x, 0.0)) +
                   hankel1_n(3, Complex(x, 0.0))) < 1e-12);
    // off-axis recurrence consistency: H_{n+1} = (2n/z) H_n - H_{n-1}
    const Complex z(7.0, 1.3);
    for (int n = 1; n <= 8; ++n) {
        const Complex lhs = hankel1_n(n + 1, z);
        const Complex rhs =
            (2.0 * double(n) / z) * hankel1_n(n, z) - hankel1_n(n - 1, z);
        CHECK(std::abs(lhs - rhs) / std::abs(lhs) < 1e-10);
    }
}

TEST_CASE("derivative identity H0' = -H1 (central differences)") {
    const double h = 1e-6;
    for (Complex z : {Complex(2.0, 0.3), Complex(18.0, 1.0)}) {
        const Complex fd =
            (hankel1_0(z + h) - hankel1_0(z - h)) / (2.0 * h);
        CHECK(std::abs(fd + hankel1_1(z)) < 1e-8);
    }
}
