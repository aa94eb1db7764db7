/*
 * Copyright (c) 2026 crsim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "crsim/espar.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "crsim/errors.hpp"

namespace crsim::espar {

void EsparGeometry::validate() const
{
    if (num_elements < 1)
        throw std::invalid_argument("EsparGeometry: num_elements must be >= 1");
    if (!(radius_wavelengths > 0.0))
        throw std::invalid_argument("EsparGeometry: radius_wavelengths must be > 0");
}

double EsparGeometry::element_angle(int m) const
{
    if (m < 1 || m >= num_elements)
        throw std::invalid_argument("EsparGeometry: element index out of range");
    return 2.0 * M_PI * (m - 1) / (num_elements - 1);
}

Eigen::VectorXcd steering_vector(const EsparGeometry& geom, double theta)
{
    geom.validate();
    const int m_count = geom.num_elements;
    Eigen::VectorXcd a(m_count);
    a(0) = 1.0;
    const double b = geom.phase_constant();
    for (int m = 1; m < m_count; ++m)
        a(m) = std::polar(1.0, b * std::cos(theta - geom.element_angle(m)));
    return a;
}

BasisPatternSet orthonormal_basis(const EsparGeometry& geom, int grid_size)
{
    geom.validate();
    const int m_count = geom.num_elements;
    if (grid_size < 8 * m_count)
        throw std::invalid_argument("orthonormal_basis: grid_size must be >= 8 M");

    BasisPatternSet set;
    set.geometry = geom;
    set.grid = Eigen::VectorXd::LinSpaced(grid_size, 0.0, 2.0 * M_PI * (grid_size - 1) / grid_size);

    // Sample the component functions a_m on the grid, one row per component.
    Eigen::MatrixXcd comp(m_count, grid_size);
    for (int i = 0; i < grid_size; ++i)
        comp.col(i) = steering_vector(geom, set.grid(i));

    const double w = 2.0 * M_PI / grid_size; // trapezoid weight (periodic grid)

    // Modified Gram-Schmidt with one unconditional re-orthogonalization pass.
    Eigen::MatrixXcd q = comp;                                    // rows become Phi_n
    Eigen::MatrixXcd coeffs = Eigen::MatrixXcd::Identity(m_count, m_count);
    auto inner = [&](const Eigen::RowVectorXcd& f, const Eigen::RowVectorXcd& g) {
        return (f.array() * g.array().conjugate()).sum() * w;
    };
    for (int n = 0; n < m_count; ++n) {
        const double orig_norm = std::sqrt(std::real(inner(comp.row(n), comp.row(n))));
        for (int pass = 0; pass < 2; ++pass) {
            for (int j = 0; j < n; ++j) {
                const std::complex<double> proj = inner(q.row(n), q.row(j));
                q.row(n) -= proj * q.row(j);
                coeffs.row(n) -= proj * coeffs.row(j);
            }
        }
        const double norm = std::sqrt(std::real(inner(q.row(n), q.row(n))));
        if (!(norm > 1e-10 * orig_norm))
            throw NumericalError("orthonormal_basis: component " + std::to_string(n) +
                                 " is linearly dependent on the grid");
        q.row(n) /= norm;
        coeffs.row(n) /= norm;
    }
    set.patterns = q;
    set.coeffs = coeffs;
    // projection(m, n) = <a_m, Phi_n>
    set.projection = comp * q.adjoint() * w;
    return set;
}

Eigen::MatrixXcd BasisPatternSet::gram() const
{
    return patterns * patterns.adjoint() * grid_weight();
}

Eigen::VectorXcd espar_currents(const Eigen::MatrixXcd& admittance,
                                const Eigen::VectorXd& reactances, std::complex<double> feed)
{
    const auto m_count = admittance.rows();
    if (admittance.cols() != m_count)
        throw std::invalid_argument("espar_currents: admittance must be square");
    if (reactances.size() != m_count - 1)
        throw std::invalid_argument("espar_currents: need M-1 reactances");

    Eigen::FullPivLU<Eigen::MatrixXcd> lu_y(admittance);
    if (!lu_y.isInvertible())
        throw NumericalError("espar_currents: admittance matrix is singular");
    Eigen::MatrixXcd loaded = lu_y.inverse();
    loaded(0, 0) += 50.0;
    for (Eigen::Index m = 1; m < m_count; ++m)
        loaded(m, m) += std::complex<double>(0.0, reactances(m - 1));

    Eigen::FullPivLU<Eigen::MatrixXcd> lu(loaded);
    if (!lu.isInvertible()) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(loaded);
        const double cond = svd.singularValues()(0) /
                            std::max(svd.singularValues()(m_count - 1), 1e-300);
        throw NumericalError("espar_currents: loaded admittance singular, condition estimate " +
                             std::to_string(cond));
    }
    Eigen::VectorXcd u = Eigen::VectorXcd::Zero(m_count);
    u(0) = 1.0;
    return feed * lu.solve(u);
}

Eigen::VectorXcd pattern_weights(const Eigen::VectorXcd& currents, const BasisPatternSet& basis)
{
    if (currents.size() != basis.projection.rows())
        throw std::invalid_argument("pattern_weights: current vector size mismatch");
    return basis.projection.transpose() * currents; // w_n = i^T q_n (no conjugation)
}

std::complex<double> radiation_pattern(const Eigen::VectorXcd& weights,
                                       const BasisPatternSet& basis, double theta)
{
    if (weights.size() != basis.coeffs.rows())
        throw std::invalid_argument("radiation_pattern: weight vector size mismatch");
    const Eigen::VectorXcd a = steering_vector(basis.geometry, theta);
    return (weights.array() * (basis.coeffs * a).array()).sum();
}

void BeamspaceChannel::validate() const
{
    if (phi_r.cols() != scatter_gains.size() || phi_t.cols() != scatter_gains.size())
        throw std::invalid_argument("BeamspaceChannel: inconsistent scatterer count");
    if (scatter_gains.size() < 1)
        throw std::invalid_argument("BeamspaceChannel: need at least one scatterer");
}

BeamspaceResult beamspace_channel_matrix(const BeamspaceChannel& ch)
{
    ch.validate();
    BeamspaceResult res;
    res.matrix = ch.phi_r * ch.scatter_gains.asDiagonal() * ch.phi_t.adjoint();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(res.matrix);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) {
        res.adof = 0;
        return res;
    }
    const double tol = 1e-10 * sv(0);
    res.adof = static_cast<int>((sv.array() > tol).count());
    return res;
}

void export_patterns_csv(const BasisPatternSet& basis, std::ostream& out)
{
    out << "theta_rad,pattern_index,re,im\n";
    char buf[128];
    for (Eigen::Index n = 0; n < basis.patterns.rows(); ++n) {
        for (Eigen::Index i = 0; i < basis.grid.size(); ++i) {
            const auto v = basis.patterns(n, i);
            std::snprintf(buf, sizeof buf, "%.10g,%lld,%.10g,%.10g\n", basis.grid(i),
                          static_cast<long long>(n), v.real(), v.imag());
            out << buf;
        }
    }
}

} // namespace crsim::espar
