/*
 * Copyright (c) 2026 crsim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

// Test-side reference numerics. Everything here is independent of the
// library implementation paths it is used to check: integration is Romberg
// (the library uses adaptive Simpson), Bessel values come from integral
// representations or std::cyl_bessel_i, and series oracles run in long
// double.

#ifndef CRSIM_TESTS_ORACLES_HPP
#define CRSIM_TESTS_ORACLES_HPP

#include <cmath>
#include <functional>
#include <vector>

namespace oracles {

// Romberg integration on [a, b]; converges fast for smooth integrands.
inline double romberg(const std::function<double(double)>& f, double a, double b,
                      double rel_tol = 1e-13, int max_level = 22)
{
    std::vector<double> row(static_cast<std::size_t>(max_level) + 1, 0.0);
    double h = b - a;
    row[0] = 0.5 * h * (f(a) + f(b));
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        double sum = 0.0;
        const long long points = 1LL << (level - 1);
        for (long long i = 0; i < points; ++i)
            sum += f(a + (2.0 * static_cast<double>(i) + 1.0) * h);
        std::vector<double> next(row.size(), 0.0);
        next[0] = 0.5 * row[0] + h * sum;
        double pow4 = 1.0;
        for (int k = 1; k <= level; ++k) {
            pow4 *= 4.0;
            next[static_cast<std::size_t>(k)] =
                (pow4 * next[static_cast<std::size_t>(k - 1)] - row[static_cast<std::size_t>(k - 1)]) /
                (pow4 - 1.0);
        }
        const double diff = std::abs(next[static_cast<std::size_t>(level)] -
                                     row[static_cast<std::size_t>(level - 1)]);
        row = next;
        if (level > 4 && diff <= rel_tol * std::abs(row[static_cast<std::size_t>(level)]) + 1e-300)
            return row[static_cast<std::size_t>(level)];
    }
    return row.back();
}

// I0 and I1 via the integral representations
//   I0(x) = (1/pi) int_0^pi e^{x cos t} dt
//   I1(x) = (1/pi) int_0^pi e^{x cos t} cos t dt
inline double bessel_i0(double x)
{
    return romberg([x](double t) { return std::exp(x * std::cos(t)); }, 0.0, M_PI) / M_PI;
}

inline double bessel_i1(double x)
{
    return romberg([x](double t) { return std::exp(x * std::cos(t)) * std::cos(t); }, 0.0, M_PI) /
           M_PI;
}

// E1(x) = e^-x int_0^inf e^-u/(x+u) du, truncated where the tail is below
// double precision.
inline double exp_integral_e1(double x)
{
    const double tail = 60.0;
    return std::exp(-x) *
           romberg([x](double u) { return std::exp(-u) / (x + u); }, 0.0, tail, 1e-14);
}

// Marcum Q1 from the complement of the Rice density integral; uses the
// standard-library Bessel function, valid for a*b small enough not to
// overflow (all grids used in the tests satisfy that).
inline double marcum_q1(double a, double b)
{
    if (b == 0.0)
        return 1.0;
    const auto pdf = [a](double t) {
        return t * std::exp(-0.5 * (t * t + a * a)) * std::cyl_bessel_i(0.0, a * t);
    };
    return 1.0 - romberg(pdf, 0.0, b, 1e-13);
}

// Kummer series M(-1/2, 1, x) in long double; L_{1/2}(x) = M(-1/2, 1, x).
inline double laguerre_half(double x)
{
    long double term = 1.0L, sum = 1.0L;
    const long double xl = x;
    for (int k = 0; k < 200; ++k) {
        const long double a = -0.5L + k;
        const long double b = 1.0L + k;
        term *= a / b * xl / (k + 1);
        sum += term;
    }
    return static_cast<double>(sum);
}

// Tail probability helpers for statistical assertions.
inline double rayleigh_cdf(double x, double mean_power)
{
    return 1.0 - std::exp(-x * x / mean_power);
}

} // namespace oracles

#endif
