/*
 * Copyright (c) 2026 crsim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "crsim/rab.hpp"

#include <cmath>
#include <stdexcept>

namespace crsim::rab {

void RabConfig::validate() const
{
    if (m_t < 1 || m_r < 1)
        throw std::invalid_argument("RabConfig: m_t and m_r must be >= 1");
}

LosBeamspaceMatrix LosBeamspaceMatrix::from_phases(const Eigen::MatrixXd& phases,
                                                   double avg_power)
{
    LosBeamspaceMatrix los;
    los.entries = std::sqrt(avg_power) *
                  phases.unaryExpr([](double p) { return std::polar(1.0, p); });
    return los;
}

LosBeamspaceMatrix LosBeamspaceMatrix::draw(int m_r, int m_t, double avg_power, Philox& rng)
{
    Eigen::MatrixXd phases(m_r, m_t);
    for (Eigen::Index m = 0; m < m_r; ++m)
        for (Eigen::Index l = 0; l < m_t; ++l)
            phases(m, l) = rng.angle();
    return from_phases(phases, avg_power);
}

void LosBeamspaceMatrix::validate(double avg_power) const
{
    const double mag = std::sqrt(avg_power);
    for (Eigen::Index i = 0; i < entries.size(); ++i)
        if (std::abs(std::abs(entries(i)) - mag) > 1e-9 * std::max(mag, 1.0))
            throw std::invalid_argument("LosBeamspaceMatrix: entry modulus != sqrt(avg_power)");
}

ScattererSet ScattererSet::draw(int count, int m_r, int m_t, double avg_power, Philox& rng)
{
    if (count < 1)
        throw std::invalid_argument("ScattererSet: count must be >= 1");
    ScattererSet s;
    s.gains.resize(count);
    s.response_r.resize(m_r, count);
    s.response_t.resize(m_t, count);
    const double per_gain = avg_power / count;
    for (int q = 0; q < count; ++q)
        s.gains(q) = rng.complex_normal(per_gain);
    for (Eigen::Index i = 0; i < s.response_r.size(); ++i)
        s.response_r(i) = rng.complex_normal(1.0);
    for (Eigen::Index i = 0; i < s.response_t.size(); ++i)
        s.response_t(i) = rng.complex_normal(1.0);
    return s;
}

Eigen::VectorXcd draw_weights(int m, Philox& rng)
{
    if (m < 1)
        throw std::invalid_argument("draw_weights: m must be >= 1");
    Eigen::VectorXcd w(m);
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    for (int i = 0; i < m; ++i)
        w(i) = std::polar(scale, rng.angle());
    return w;
}

Eigen::VectorXcd weights_from_phases(const Eigen::VectorXd& phases)
{
    const auto m = phases.size();
    Eigen::VectorXcd w(m);
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    for (Eigen::Index i = 0; i < m; ++i)
        w(i) = std::polar(scale, phases(i));
    return w;
}

std::complex<double> equivalent_channel(const RabConfig& cfg, const channels::ChannelSpec& spec,
                                        const LosBeamspaceMatrix& los, const ScattererSet& scat,
                                        const Eigen::VectorXcd& w_r, const Eigen::VectorXcd& w_t)
{
    cfg.validate();
    if (w_r.size() != los.entries.rows() || w_t.size() != los.entries.cols())
        throw std::invalid_argument("equivalent_channel: weight dimensions do not match LoS matrix");
    if (scat.response_r.rows() != w_r.size() || scat.response_t.rows() != w_t.size())
        throw std::invalid_argument("equivalent_channel: weight dimensions do not match scatterers");

    const double k = spec.k_factor;
    const std::complex<double> fixed = (w_r.transpose() * los.entries * w_t)(0, 0);
    const Eigen::MatrixXcd scatter_matrix =
        scat.response_r * scat.gains.asDiagonal() * scat.response_t.adjoint();
    const std::complex<double> diffuse = (w_r.transpose() * scatter_matrix * w_t)(0, 0);
    return std::sqrt(k / (k + 1.0)) * fixed + diffuse / std::sqrt(k + 1.0);
}

std::complex<double> artificial_fading_component(const RabConfig& cfg,
                                                 const channels::ChannelSpec& spec,
                                                 const LosBeamspaceMatrix& los,
                                                 const Eigen::VectorXcd& w_r,
                                                 const Eigen::VectorXcd& w_t)
{
    cfg.validate();
    if (w_r.size() != los.entries.rows() || w_t.size() != los.entries.cols())
        throw std::invalid_argument(
            "artificial_fading_component: weight dimensions do not match LoS matrix");
    const double k = spec.k_factor;
    return std::sqrt(k / (k + 1.0)) * (w_r.transpose() * los.entries * w_t)(0, 0);
}

Eigen::VectorXd smart_receive_weights(const Eigen::VectorXcd& a)
{
    Eigen::VectorXd phases(a.size());
    for (Eigen::Index m = 0; m < a.size(); ++m)
        phases(m) = -std::arg(a(m));
    return phases;
}

Eigen::VectorXcd smart_superposition(const LosBeamspaceMatrix& los, double avg_power,
                                     const Eigen::VectorXcd& w_t)
{
    // a_m = sum_l e^{j(theta_T,l + phi^{l,m})}; the weight normalization
    // 1/sqrt(M_T) and the entry magnitude sqrt(gbar) are divided back out.
    const double m_t = static_cast<double>(w_t.size());
    return (los.entries * w_t) * std::sqrt(m_t / avg_power);
}

NullingProbability nulling_probability(int m_t, double k_factor, double gbar, double delta,
                                       std::uint64_t mc_draws, Philox& rng)
{
    if (m_t < 2)
        throw std::invalid_argument("nulling_probability: m_t must be >= 2 (or the Rayleigh limit)");
    if (!(delta > 0.0))
        throw std::invalid_argument("nulling_probability: delta must be > 0");

    NullingProbability result;
    const double t = delta * delta * (k_factor + 1.0) / (k_factor * gbar);

    if (m_t == kRayleighLimitPatterns) {
        result.epsilon_closed = -std::expm1(-t);
        std::uint64_t hits = 0;
        const double var = k_factor * gbar / (k_factor + 1.0);
        for (std::uint64_t i = 0; i < mc_draws; ++i)
            if (std::abs(rng.complex_normal(var)) < delta)
                ++hits;
        result.epsilon_mc = static_cast<double>(hits) / static_cast<double>(mc_draws);
        return result;
    }

    if (m_t == 2) {
        // |U|^2 = (K gbar / (2(K+1))) (2 + 2 cos Delta) with Delta uniform;
        // P(|U| < delta) is the arcsine law in t = delta^2 (K+1)/(K gbar).
        if (t >= 2.0)
            result.epsilon_closed = 1.0;
        else if (t <= 0.0)
            result.epsilon_closed = 0.0;
        else
            result.epsilon_closed = std::asin(t - 1.0) / M_PI + 0.5;
    } else {
        result.epsilon_closed = std::numeric_limits<double>::quiet_NaN();
    }

    const double amp = std::sqrt(k_factor * gbar / ((k_factor + 1.0) * m_t));
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < mc_draws; ++i) {
        std::complex<double> sum = 0.0;
        for (int l = 0; l < m_t; ++l)
            sum += std::polar(1.0, rng.angle());
        if (amp * std::abs(sum) < delta)
            ++hits;
    }
    result.epsilon_mc = static_cast<double>(hits) / static_cast<double>(mc_draws);
    return result;
}

LinkEnsemble::LinkEnsemble(const RabConfig& cfg, const channels::SystemSpec& system,
                           Philox& phase_rng, ScatterModel scatter, int scatterer_count)
    : cfg_(cfg), system_(system), scatter_(scatter), scatterer_count_(scatterer_count)
{
    cfg_.validate();
    system_.validate();
    if (scatterer_count_ < 1)
        throw std::invalid_argument("LinkEnsemble: scatterer_count must be >= 1");
    phase_s_.resize(cfg.m_r, cfg.m_t);
    for (Eigen::Index i = 0; i < phase_s_.size(); ++i)
        phase_s_(i) = phase_rng.angle();
    phase_sp_.resize(cfg.m_t);
    for (Eigen::Index i = 0; i < phase_sp_.size(); ++i)
        phase_sp_(i) = phase_rng.angle();
    phase_ps_.resize(cfg.m_r);
    for (Eigen::Index i = 0; i < phase_ps_.size(); ++i)
        phase_ps_(i) = phase_rng.angle();
}

std::complex<double> LinkEnsemble::scattered(double k_factor, double avg_power, int rows,
                                             int cols, const Eigen::VectorXcd& w_r,
                                             const Eigen::VectorXcd& w_t, Philox& rng) const
{
    if (scatter_ == ScatterModel::gaussian)
        return rng.complex_normal(avg_power / (k_factor + 1.0));
    const ScattererSet set = ScattererSet::draw(scatterer_count_, rows, cols, avg_power, rng);
    const Eigen::MatrixXcd m = set.response_r * set.gains.asDiagonal() * set.response_t.adjoint();
    return (w_r.transpose() * m * w_t)(0, 0) / std::sqrt(k_factor + 1.0);
}

LinkEnsemble::SlotGains LinkEnsemble::sample_links(Philox& rng) const
{
    const int m_t = cfg_.m_t, m_r = cfg_.m_r;
    SlotGains g;

    // Transmit phases first, then receive phases: the smart receiver derives
    // its phases from the transmit draw and the secondary-link LoS structure.
    Eigen::VectorXd theta_t(m_t);
    for (int l = 0; l < m_t; ++l)
        theta_t(l) = rng.angle();

    // a_m = sum_l e^{j(theta_T,l + phi_s^{l,m})}
    Eigen::VectorXcd a = Eigen::VectorXcd::Zero(m_r);
    for (int m = 0; m < m_r; ++m)
        for (int l = 0; l < m_t; ++l)
            a(m) += std::polar(1.0, theta_t(l) + phase_s_(m, l));

    Eigen::VectorXd theta_r(m_r);
    if (cfg_.receive_mode == ReceiveMode::smart) {
        theta_r = smart_receive_weights(a);
    } else {
        for (int m = 0; m < m_r; ++m)
            theta_r(m) = rng.angle();
    }

    const Eigen::VectorXcd w_t = weights_from_phases(theta_t);
    const Eigen::VectorXcd w_r = weights_from_phases(theta_r);

    // Secondary link: U_s = sqrt(K gbar/((K+1) M_T M_R)) sum_m a_m e^{j theta_R,m}
    {
        const double k = system_.su_su.k_factor;
        const double gbar = system_.su_su.avg_power;
        std::complex<double> sum = 0.0;
        for (int m = 0; m < m_r; ++m)
            sum += a(m) * std::polar(1.0, theta_r(m));
        const double amp = std::sqrt(k * gbar / ((k + 1.0) * m_t * m_r));
        g.h_s = amp * sum + scattered(k, gbar, m_r, m_t, w_r, w_t, rng);
    }
    // SU-to-PU link: single-antenna receiver, transmit randomization only.
    {
        const double k = system_.su_pu.k_factor;
        const double gbar = system_.su_pu.avg_power;
        std::complex<double> sum = 0.0;
        for (int l = 0; l < m_t; ++l)
            sum += std::polar(1.0, theta_t(l) + phase_sp_(l));
        const double amp = std::sqrt(k * gbar / ((k + 1.0) * m_t));
        const Eigen::VectorXcd one = Eigen::VectorXcd::Ones(1);
        g.h_sp = amp * sum + scattered(k, gbar, 1, m_t, one, w_t, rng);
    }
    // PU-to-SU link: single-antenna transmitter, receive randomization only.
    {
        const double k = system_.pu_su.k_factor;
        const double gbar = system_.pu_su.avg_power;
        std::complex<double> sum = 0.0;
        for (int m = 0; m < m_r; ++m)
            sum += std::polar(1.0, theta_r(m) + phase_ps_(m));
        const double amp = std::sqrt(k * gbar / ((k + 1.0) * m_r));
        const Eigen::VectorXcd one = Eigen::VectorXcd::Ones(1);
        g.h_ps = amp * sum + scattered(k, gbar, m_r, 1, w_r, one, rng);
    }
    return g;
}

channels::ChannelTriple LinkEnsemble::sample_triple(Philox& rng) const
{
    const SlotGains g = sample_links(rng);
    return {std::norm(g.h_s), std::norm(g.h_sp), std::norm(g.h_ps)};
}

} // namespace crsim::rab
