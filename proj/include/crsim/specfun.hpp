/*
 * Copyright (c) 2026 crsim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef CRSIM_SPECFUN_HPP
#define CRSIM_SPECFUN_HPP

#include <cstdint>

namespace crsim::specfun {

inline constexpr double kEulerGamma = 0.57721566490153286061;

/// Modified Bessel function I0(x). Relative error below 1e-12 for |x| <= 50.
double bessel_i0(double x);

/// Modified Bessel function I1(x). Odd in x.
double bessel_i1(double x);

/// Exponentially scaled variants e^{-t} I0(t), e^{-t} I1(t) for t >= 0.
/// Safe for arbitrarily large t (no overflow).
double bessel_i0e(double t);
double bessel_i1e(double t);

/// First-order Marcum Q function Q1(a, b), a, b >= 0.
///
/// Evaluated as the canonical series of Poisson-weighted chi-square tails
/// (the term-by-term expansion of the modified-Bessel series), truncated
/// when the remaining Poisson mass falls below 1e-14. All terms are
/// positive, so no cancellation occurs. Arguments are limited to the
/// moderate range a, b <= 37 where the leading weight exp(-a^2/2) is
/// representable; all uses in this library stay far below that.
double marcum_q1(double a, double b);

/// Exponential integral E1(x) = int_x^inf e^-t / t dt for x > 0.
double exp_integral_e1(double x);

/// Laguerre polynomial of order 1/2 for x <= 0, via the Bessel identity
/// L_{1/2}(x) = e^{x/2} [(1-x) I0(-x/2) - x I1(-x/2)], evaluated with the
/// scaled Bessel functions so arbitrarily negative arguments do not overflow.
double laguerre_half(double x);

/// N-th harmonic number, exact sum. N >= 1.
double harmonic(std::int64_t n);

} // namespace crsim::specfun

#endif
