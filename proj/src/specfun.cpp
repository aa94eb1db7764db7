/*
 * Copyright (c) 2026 crsim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "crsim/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace crsim::specfun {

namespace {

void require_finite(double x, const char* name)
{
    if (!std::isfinite(x))
        throw std::domain_error(std::string(name) + ": non-finite argument");
}

// Power series sum_k (t/2)^{2k} / (k!)^2, all terms positive. Used below the
// asymptotic crossover; at t = 20 roughly 45 terms reach double precision.
double i0_series(double t)
{
    const double q = 0.25 * t * t;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 500; ++k) {
        term *= q / (static_cast<double>(k) * k);
        sum += term;
        if (term < sum * 1e-18)
            break;
    }
    return sum;
}

double i1_series(double t)
{
    const double q = 0.25 * t * t;
    double term = 0.5 * t, sum = term;
    for (int k = 1; k < 500; ++k) {
        term *= q / (static_cast<double>(k) * (k + 1));
        sum += term;
        if (term < sum * 1e-18)
            break;
    }
    return sum;
}

// Asymptotic expansion I_nu(t) ~ e^t/sqrt(2 pi t) * sum_k (-1)^k a_k(nu)/t^k
// with a_k(nu) = prod_{j=1..k} (4 nu^2 - (2j-1)^2) / (8^k k!). Truncated at
// the smallest term; for t >= 20 that term is below e^{-2t} ~ 4e-18 relative.
double i_asymptotic_scaled(double t, double four_nu_sq)
{
    double term = 1.0, sum = 1.0;
    double prev = std::numeric_limits<double>::max();
    for (int k = 1; k < 40; ++k) {
        const double factor = -(four_nu_sq - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * t);
        term *= factor;
        if (std::abs(term) >= prev)
            break; // divergent tail reached
        sum += term;
        prev = std::abs(term);
        if (std::abs(term) < 1e-18 * std::abs(sum))
            break;
    }
    return sum / std::sqrt(2.0 * M_PI * t);
}

constexpr double kAsymptoticCrossover = 20.0;

} // namespace

double bessel_i0e(double t)
{
    require_finite(t, "bessel_i0e");
    if (t < 0.0)
        throw std::domain_error("bessel_i0e: negative argument");
    if (t < kAsymptoticCrossover)
        return std::exp(-t) * i0_series(t);
    return i_asymptotic_scaled(t, 0.0);
}

double bessel_i1e(double t)
{
    require_finite(t, "bessel_i1e");
    if (t < 0.0)
        throw std::domain_error("bessel_i1e: negative argument");
    if (t < kAsymptoticCrossover)
        return std::exp(-t) * i1_series(t);
    return i_asymptotic_scaled(t, 4.0);
}

double bessel_i0(double x)
{
    require_finite(x, "bessel_i0");
    const double t = std::abs(x);
    if (t < kAsymptoticCrossover)
        return i0_series(t);
    return std::exp(t) * i_asymptotic_scaled(t, 0.0);
}

double bessel_i1(double x)
{
    require_finite(x, "bessel_i1");
    const double t = std::abs(x);
    const double sign = x < 0.0 ? -1.0 : 1.0;
    if (t < kAsymptoticCrossover)
        return sign * i1_series(t);
    return sign * std::exp(t) * i_asymptotic_scaled(t, 4.0);
}

double marcum_q1(double a, double b)
{
    require_finite(a, "marcum_q1");
    require_finite(b, "marcum_q1");
    if (a < 0.0 || b < 0.0)
        throw std::domain_error("marcum_q1: negative argument");
    const double x = 0.5 * a * a; // Poisson mean of the mixing weights
    const double y = 0.5 * b * b;
    if (x > 700.0 || y > 700.0)
        throw std::domain_error("marcum_q1: argument outside supported series range");
    if (b == 0.0)
        return 1.0; // integral over the full support

    // Q1(a,b) = sum_k e^-x x^k/k! * T_k,  T_k = e^-y sum_{m<=k} y^m/m!.
    double pois = std::exp(-x);   // k = 0 weight
    double pois_cum = pois;
    double inner_term = std::exp(-y); // y^k/k! * e^-y at k = 0
    double inner = inner_term;        // T_k
    double q = pois * inner;
    for (int k = 1; k < 100000; ++k) {
        pois *= x / k;
        pois_cum += pois;
        inner_term *= y / k;
        inner += inner_term;
        q += pois * inner;
        // Remaining terms are bounded by the remaining Poisson mass; past the
        // mode the weights decay geometrically, so a tiny weight also ends it.
        if (k > x && (1.0 - pois_cum < 1e-15 || pois < 1e-17))
            break;
    }
    if (q < 0.0)
        q = 0.0;
    if (q > 1.0)
        q = 1.0;
    return q;
}

double exp_integral_e1(double x)
{
    require_finite(x, "exp_integral_e1");
    if (x <= 0.0)
        throw std::domain_error("exp_integral_e1: argument must be positive");
    if (x <= 1.0) {
        // E1(x) = -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k k!)
        double sum = 0.0, term = 1.0;
        for (int k = 1; k < 60; ++k) {
            term *= -x / k;
            const double contrib = -term / k;
            sum += contrib;
            if (std::abs(contrib) < 1e-18 * std::abs(sum) && k > 3)
                break;
        }
        return -kEulerGamma - std::log(x) + sum;
    }
    // Continued fraction E1(x) = e^-x / (x + 1 - 1/(x + 3 - 4/(x + 5 - 9/...)))
    // evaluated with the modified Lentz method.
    const double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int k = 1; k < 200; ++k) {
        const double an = -static_cast<double>(k) * k;
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny)
            d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-15)
            break;
    }
    return std::exp(-x) * h;
}

double laguerre_half(double x)
{
    require_finite(x, "laguerre_half");
    if (x > 0.0)
        throw std::domain_error("laguerre_half: argument must be <= 0");
    const double t = -0.5 * x; // >= 0
    // e^{x/2} [(1-x) I0(t) - x I1(t)] = (1+2t) i0e(t) + 2t i1e(t)
    return (1.0 + 2.0 * t) * bessel_i0e(t) + 2.0 * t * bessel_i1e(t);
}

double harmonic(std::int64_t n)
{
    if (n < 1)
        throw std::domain_error("harmonic: n must be >= 1");
    double sum = 0.0;
    for (std::int64_t k = n; k >= 1; --k) // ascending magnitudes
        sum += 1.0 / static_cast<double>(k);
    return sum;
}

} // namespace crsim::specfun
