/*
 * Copyright (c) 2026 crsim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "crsim/specfun.hpp"
#include "oracles.hpp"

using namespace crsim::specfun;

TEST_CASE("bessel i0 anchor values")
{
    CHECK(bessel_i0(0.0) == 1.0);
    CHECK(bessel_i0(1.0) == doctest::Approx(1.2660658777520083356).epsilon(1e-13));
    CHECK(bessel_i0(10.0) == doctest::Approx(2815.7166284662544715).epsilon(1e-13));
    CHECK(bessel_i0(50.0) == doctest::Approx(2.9325537838493363267e20).epsilon(1e-12));
    CHECK(bessel_i0(-3.0) == bessel_i0(3.0)); // even
}

TEST_CASE("bessel i1 anchor values")
{
    CHECK(bessel_i1(0.0) == 0.0);
    CHECK(bessel_i1(1.0) == doctest::Approx(0.56515910399248502721).epsilon(1e-13));
    CHECK(bessel_i1(2.0) == doctest::Approx(1.5906368546373290634).epsilon(1e-13));
    CHECK(bessel_i1(-2.0) == doctest::Approx(-1.5906368546373290634).epsilon(1e-13)); // odd
}

TEST_CASE("bessel values track the integral-representation oracle")
{
    for (int i = 0; i <= 100; ++i) {
        const double x = 1e-3 * std::pow(50.0 / 1e-3, i / 100.0);
        CHECK(bessel_i0(x) == doctest::Approx(oracles::bessel_i0(x)).epsilon(1e-10));
        CHECK(bessel_i1(x) == doctest::Approx(oracles::bessel_i1(x)).epsilon(1e-10));
    }
}

TEST_CASE("scaled bessel functions stay finite far beyond the overflow range")
{
    const double t = 3e5;
    const double i0e = bessel_i0e(t);
    // Leading asymptotic term 1/sqrt(2 pi t)
    CHECK(i0e == doctest::Approx(1.0 / std::sqrt(2.0 * M_PI * t)).epsilon(1e-5));
    CHECK(bessel_i1e(t) < i0e);
}

TEST_CASE("bessel rejects non-finite input")
{
    CHECK_THROWS_AS(bessel_i0(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
    CHECK_THROWS_AS(bessel_i1(std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST_CASE("marcum q1 reductions and anchor values")
{
    CHECK(marcum_q1(1.7, 0.0) == 1.0);
    CHECK(marcum_q1(0.0, 1.3) == doctest::Approx(std::exp(-1.3 * 1.3 / 2.0)).epsilon(1e-14));
    CHECK(marcum_q1(1.0, 1.0) == doctest::Approx(0.73287980379682021825).epsilon(1e-12));
    CHECK(marcum_q1(2.0, 1.0) == doctest::Approx(0.91810769636940600391).epsilon(1e-12));
    CHECK(marcum_q1(1.0, 2.0) == doctest::Approx(0.26901206003590999668).epsilon(1e-12));
    CHECK(marcum_q1(3.0, 4.0) == doctest::Approx(0.19651218938840762277).epsilon(1e-12));
    CHECK(marcum_q1(0.5, 0.5) == doctest::Approx(0.89550858106985968194).epsilon(1e-12));
}

TEST_CASE("marcum q1 against the density-integral oracle on a grid")
{
    for (int ia = 0; ia < 20; ++ia) {
        for (int ib = 0; ib < 20; ++ib) {
            const double a = 6.0 * ia / 19.0;
            const double b = 6.0 * ib / 19.0;
            const double got = marcum_q1(a, b);
            const double want = oracles::marcum_q1(a, b);
            CHECK(std::abs(got - want) < 1e-8);
        }
    }
}

TEST_CASE("marcum q1 monotone in both arguments and clamped to [0,1]")
{
    for (double a : {0.0, 0.5, 1.0, 2.0, 4.0}) {
        double prev = 1.0 + 1e-12;
        for (double b = 0.1; b <= 8.0; b += 0.1) {
            const double q = marcum_q1(a, b);
            CHECK(q >= 0.0);
            CHECK(q <= 1.0);
            CHECK(q < prev); // strictly decreasing in b
            prev = q;
        }
    }
    for (double b : {0.5, 1.0, 2.0}) {
        double prev = -1.0;
        for (double a = 0.0; a <= 8.0; a += 0.25) {
            const double q = marcum_q1(a, b);
            CHECK(q > prev);
            prev = q;
        }
    }
    CHECK_THROWS_AS(marcum_q1(-0.1, 1.0), std::domain_error);
    CHECK_THROWS_AS(marcum_q1(1.0, -2.0), std::domain_error);
}

TEST_CASE("exponential integral anchors, oracle grid and bracketing bound")
{
    CHECK(exp_integral_e1(1.0) == doctest::Approx(0.21938393439552027368).epsilon(1e-12));
    CHECK(exp_integral_e1(10.0) == doctest::Approx(4.1569689296853242774e-6).epsilon(1e-12));
    CHECK(exp_integral_e1(0.5) == doctest::Approx(0.55977359477616081175).epsilon(1e-12));

    for (int i = 0; i <= 100; ++i) {
        const double x = 1e-3 * std::pow(30.0 / 1e-3, i / 100.0);
        CHECK(exp_integral_e1(x) == doctest::Approx(oracles::exp_integral_e1(x)).epsilon(1e-10));
        // 0.5 e^-x ln(1 + 2/x) < E1(x) < e^-x ln(1 + 1/x)
        const double e1 = exp_integral_e1(x);
        CHECK(e1 > 0.5 * std::exp(-x) * std::log1p(2.0 / x));
        CHECK(e1 < std::exp(-x) * std::log1p(1.0 / x));
    }

    // x -> 0+: E1(x) + ln x -> -gamma
    CHECK(exp_integral_e1(1e-9) + std::log(1e-9) == doctest::Approx(-kEulerGamma).epsilon(1e-8));

    CHECK_THROWS_AS(exp_integral_e1(0.0), std::domain_error);
    CHECK_THROWS_AS(exp_integral_e1(-1.0), std::domain_error);
}

TEST_CASE("laguerre half anchors and series oracle")
{
    CHECK(laguerre_half(0.0) == 1.0);
    CHECK(laguerre_half(-0.5) == doctest::Approx(1.2355820575582631692).epsilon(1e-12));
    CHECK(laguerre_half(-1.0) == doctest::Approx(oracles::laguerre_half(-1.0)).epsilon(1e-12));
    CHECK(laguerre_half(-2.0) == doctest::Approx(oracles::laguerre_half(-2.0)).epsilon(1e-12));
    CHECK(laguerre_half(-5.0) == doctest::Approx(2.6532018973295492084).epsilon(1e-12));
    CHECK(laguerre_half(-50.0) == doctest::Approx(8.0188411168839107309).epsilon(1e-12));
    CHECK_THROWS_AS(laguerre_half(0.5), std::domain_error);
}

TEST_CASE("laguerre half large-argument limit")
{
    // L_{1/2}(x) / (|x|^{1/2} / Gamma(3/2)) -> 1 as x -> -inf
    const double gamma_3_2 = 0.5 * std::sqrt(M_PI);
    for (double x : {-1e4, -1e6, -1e8}) {
        const double ratio = laguerre_half(x) / (std::sqrt(-x) / gamma_3_2);
        CHECK(ratio == doctest::Approx(1.0).epsilon(2e-4));
    }
}

TEST_CASE("harmonic numbers")
{
    CHECK(harmonic(1) == 1.0);
    CHECK(harmonic(3) == doctest::Approx(11.0 / 6.0).epsilon(1e-15));
    CHECK(harmonic(100) == doctest::Approx(5.1873775176396202608).epsilon(1e-14));
    // H_N - ln N -> gamma
    CHECK(harmonic(1000000) - std::log(1e6) == doctest::Approx(kEulerGamma).epsilon(1e-6));
    CHECK_THROWS_AS(harmonic(0), std::domain_error);
}
