/*
 * Copyright (c) 2026 crsim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "crsim/rng.hpp"
#include "crsim/stats.hpp"

using crsim::Philox;

TEST_CASE("philox matches the reference known-answer vectors")
{
    // Frozen outputs of the reference philox4x64-10 generator for three keys
    // (counter starting at zero).
    {
        Philox g(0, 0);
        const std::uint64_t expect[8] = {0x02f4ba6408e4d89bULL, 0x3dd62b0b9ca8c5b2ULL,
                                         0x1c8667a55d902e79ULL, 0x907d7a052fd5b4dcULL,
                                         0x809bf322883987c3ULL, 0x471128b9e807f7ddULL,
                                         0xf250ba0dbec065b7ULL, 0xfc6ed66767a457bcULL};
        for (auto e : expect)
            CHECK(g.next_u64() == e);
    }
    {
        Philox g(0x123456789abcdef0ULL, 0x0fedcba987654321ULL);
        const std::uint64_t expect[8] = {0x4aef8f263af04061ULL, 0x4538a4a9af13af9aULL,
                                         0x40800e0e2ff4269fULL, 0x96d3599b96694888ULL,
                                         0x10e9b31750e90c0fULL, 0x5db4d74529a58e4dULL,
                                         0x1b1a50a64d520548ULL, 0x53143197af605757ULL};
        for (auto e : expect)
            CHECK(g.next_u64() == e);
    }
    {
        Philox g(42, 7);
        const std::uint64_t expect[8] = {0xa64064f34e84b9a3ULL, 0xe287959a866a08fdULL,
                                         0x8dc181f009b96c03ULL, 0xf3f6001d4fa83454ULL,
                                         0x69c633ee791df6b3ULL, 0x89327f7a8f0127a4ULL,
                                         0x1ed8260458996ff6ULL, 0x4299f7433fb1683eULL};
        for (auto e : expect)
            CHECK(g.next_u64() == e);
    }
}

TEST_CASE("identical streams replay identically")
{
    Philox a(99, 5), b(99, 5);
    for (int i = 0; i < 10000; ++i)
        REQUIRE(a.next_u64() == b.next_u64());
}

TEST_CASE("uniform range and moments")
{
    Philox g(1, 0);
    double sum = 0.0, sum_sq = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double u = g.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
        sum_sq += u * u;
    }
    CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
    CHECK(sum_sq / n == doctest::Approx(1.0 / 3.0).epsilon(0.01));
}

TEST_CASE("complex normal has the requested power and circular symmetry")
{
    Philox g(2, 3);
    const double variance = 2.5;
    double power = 0.0;
    std::complex<double> mean = 0.0;
    const int n = 400000;
    for (int i = 0; i < n; ++i) {
        const auto v = g.complex_normal(variance);
        power += std::norm(v);
        mean += v;
    }
    CHECK(power / n == doctest::Approx(variance).epsilon(0.01));
    CHECK(std::abs(mean) / n < 0.01);
}

TEST_CASE("distinct substreams look independent")
{
    Philox a(77, 0), b(77, 1);
    std::vector<double> ua, ub;
    const int n = 100000;
    ua.reserve(n);
    ub.reserve(n);
    for (int i = 0; i < n; ++i) {
        ua.push_back(a.uniform());
        ub.push_back(b.uniform());
    }
    CHECK(std::abs(crsim::pearson_correlation(ua, ub)) < 0.01);
}
