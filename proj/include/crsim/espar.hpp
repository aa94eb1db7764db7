/*
 * Copyright (c) 2026 crsim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef CRSIM_ESPAR_HPP
#define CRSIM_ESPAR_HPP

#include <Eigen/Dense>
#include <complex>
#include <iosfwd>

namespace crsim::espar {

/// Circular parasitic array: one active element at the center, M-1 identical
/// parasitic elements at radius d on angles theta_m = 2 pi (m-1)/(M-1).
struct EsparGeometry {
    int num_elements = 1;            // M >= 1
    double radius_wavelengths = 0.25; // d / lambda

    void validate() const;
    /// b = 2 pi d / lambda
    double phase_constant() const { return 2.0 * M_PI * radius_wavelengths; }
    /// theta_m for m in [1, M-1]
    double element_angle(int m) const;
};

/// Steering vector a(theta): a_0 = 1, a_m = exp(j b cos(theta - theta_m)).
Eigen::VectorXcd steering_vector(const EsparGeometry& geom, double theta);

/// Orthonormal basis patterns spanning the steering-vector component
/// functions, built by modified Gram-Schmidt (re-orthogonalized once) with
/// trapezoid-rule inner products on a uniform angular grid. Pattern count
/// equals the element count M.
struct BasisPatternSet {
    EsparGeometry geometry;
    Eigen::VectorXd grid;        // G angles in [0, 2 pi)
    Eigen::MatrixXcd patterns;   // M x G, row n holds Phi_n on the grid
    Eigen::MatrixXcd projection; // M x M, column n is q_n with (q_n)_m = <a_m, Phi_n>
    Eigen::MatrixXcd coeffs;     // M x M, Phi_n(theta) = sum_m coeffs(n, m) a_m(theta)

    /// Discrete Gram matrix of the patterns (trapezoid rule over the grid).
    Eigen::MatrixXcd gram() const;
    double grid_weight() const { return 2.0 * M_PI / static_cast<double>(grid.size()); }
};

/// Requires grid_size >= 8 M. Throws NumericalError naming the offending
/// component index if the steering component functions are rank deficient on
/// the grid.
BasisPatternSet orthonormal_basis(const EsparGeometry& geom, int grid_size);

/// Element currents i = v_s (Y^-1 + X)^-1 u with X = diag(50, j x_1, ...,
/// j x_{M-1}) and u = e_1. Throws NumericalError with a condition estimate if
/// the loaded admittance is numerically singular.
Eigen::VectorXcd espar_currents(const Eigen::MatrixXcd& admittance,
                                const Eigen::VectorXd& reactances, std::complex<double> feed);

/// Basis-pattern weights w_n = i^T q_n.
Eigen::VectorXcd pattern_weights(const Eigen::VectorXcd& currents, const BasisPatternSet& basis);

/// P(theta) = sum_n w_n Phi_n(theta), evaluated exactly through the
/// Gram-Schmidt coefficients (valid on and off the grid).
std::complex<double> radiation_pattern(const Eigen::VectorXcd& weights,
                                       const BasisPatternSet& basis, double theta);

/// Beamspace scattering description: pattern responses toward Q scatterers
/// and the diagonal scatterer gains.
struct BeamspaceChannel {
    Eigen::MatrixXcd phi_r;         // M_R x Q
    Eigen::MatrixXcd phi_t;         // M_T x Q
    Eigen::VectorXcd scatter_gains; // beta_q, length Q

    void validate() const;
};

struct BeamspaceResult {
    Eigen::MatrixXcd matrix; // M_R x M_T
    int adof = 0;            // numerical rank (aerial degrees of freedom)
};

/// H_bs = Phi_R H_b Phi_T^H with ADoF = rank at tolerance 1e-10 * sigma_max.
BeamspaceResult beamspace_channel_matrix(const BeamspaceChannel& ch);

/// CSV export, columns (theta_rad, pattern_index, re, im).
void export_patterns_csv(const BasisPatternSet& basis, std::ostream& out);

} // namespace crsim::espar

#endif
