/*
 * Copyright (c) 2026 crsim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "crsim/quadrature.hpp"

#include <cmath>
#include <string>

#include "crsim/errors.hpp"

namespace crsim {

namespace {

struct SimpsonState {
    const std::function<double(double)>& f;
    double worst_panel_error = 0.0;
};

double simpson(double fa, double fm, double fb, double h) { return h / 6.0 * (fa + 4.0 * fm + fb); }

double adapt(SimpsonState& st, double a, double b, double fa, double fm, double fb, double whole,
             double tol, int depth)
{
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = st.f(lm), frm = st.f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double err = (left + right - whole) / 15.0;
    if (std::abs(err) <= tol || depth <= 0) {
        if (depth <= 0 && std::abs(err) > st.worst_panel_error)
            st.worst_panel_error = std::abs(err);
        return left + right + err;
    }
    return adapt(st, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adapt(st, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol,
                 int max_depth)
{
    if (a == b)
        return 0.0;
    SimpsonState st{f};
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = simpson(fa, fm, fb, b - a);
    const double result = adapt(st, a, b, fa, fm, fb, whole, tol, max_depth);
    if (st.worst_panel_error > tol)
        throw NumericalError("integrate: tolerance " + std::to_string(tol) +
                             " not reached, achieved " + std::to_string(st.worst_panel_error));
    return result;
}

double integrate_to_infinity(const std::function<double(double)>& f, double a, double tol)
{
    double total = 0.0;
    double left = a;
    double width = 1.0;
    for (int panel = 0; panel < 80; ++panel) {
        const double right = left + width;
        const double part = integrate(f, left, right, tol * 0.25);
        total += part;
        left = right;
        width *= 2.0;
        if (std::abs(part) < tol * 0.25 && panel > 2)
            return total;
    }
    throw NumericalError("integrate_to_infinity: tail did not decay below tolerance");
}

} // namespace crsim
