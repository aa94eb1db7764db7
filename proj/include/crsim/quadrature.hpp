/*
 * Copyright (c) 2026 crsim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef CRSIM_QUADRATURE_HPP
#define CRSIM_QUADRATURE_HPP

#include <functional>

namespace crsim {

/// Adaptive Simpson integration of f over [a, b] to absolute tolerance tol.
/// Throws NumericalError (reporting the achieved tolerance) if the recursion
/// depth limit is reached before the tolerance is met.
double integrate(const std::function<double(double)>& f, double a, double b, double tol,
                 int max_depth = 48);

/// Integral of f over [a, inf) by doubling panels until a panel contributes
/// less than tol. Suitable for integrands with at least 1/x^2-type decay.
double integrate_to_infinity(const std::function<double(double)>& f, double a, double tol);

} // namespace crsim

#endif
