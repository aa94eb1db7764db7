/*
 * Copyright (c) 2026 crsim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "crsim/channels.hpp"

#include <cmath>
#include <stdexcept>

#include "crsim/specfun.hpp"

namespace crsim::channels {

void ChannelSpec::validate() const
{
    if (!(k_factor >= 0.0) || !std::isfinite(k_factor))
        throw std::invalid_argument("ChannelSpec: k_factor must be finite and >= 0");
    if (!(avg_power > 0.0) || !std::isfinite(avg_power))
        throw std::invalid_argument("ChannelSpec: avg_power must be finite and > 0");
    if (!std::isfinite(los_phase))
        throw std::invalid_argument("ChannelSpec: los_phase must be finite");
}

void SystemSpec::validate() const
{
    su_su.validate();
    su_pu.validate();
    pu_su.validate();
    if (!(pu_tx_power > 0.0) || !std::isfinite(pu_tx_power))
        throw std::invalid_argument("SystemSpec: pu_tx_power must be finite and > 0");
}

std::complex<double> sample_rician(const ChannelSpec& spec, Philox& rng)
{
    const double k = spec.k_factor;
    const std::complex<double> los =
        std::sqrt(k / (k + 1.0)) * std::polar(1.0, spec.los_phase);
    const std::complex<double> diffuse = rng.complex_normal(1.0 / (k + 1.0));
    return std::sqrt(spec.avg_power) * (los + diffuse);
}

double rician_power_pdf(double gamma, const ChannelSpec& spec)
{
    if (gamma < 0.0 || !std::isfinite(gamma))
        throw std::domain_error("rician_power_pdf: gamma must be >= 0");
    const double k = spec.k_factor;
    const double g = spec.avg_power;
    // (1+K)/gbar e^{-K - (1+K)g/gbar} I0(2 sqrt(K(1+K)g/gbar)) with the
    // exponent and the Bessel growth combined: the net exponent is
    // -(sqrt(K) - sqrt((1+K)g/gbar))^2, stable for any K.
    const double u = std::sqrt(k);
    const double w = std::sqrt((1.0 + k) * gamma / g);
    const double diff = u - w;
    return (1.0 + k) / g * std::exp(-diff * diff) * specfun::bessel_i0e(2.0 * u * w);
}

double rician_power_cdf(double gamma, const ChannelSpec& spec)
{
    if (gamma < 0.0 || !std::isfinite(gamma))
        throw std::domain_error("rician_power_cdf: gamma must be >= 0");
    const double k = spec.k_factor;
    const double b = std::sqrt(2.0 * (1.0 + k) * gamma / spec.avg_power);
    return 1.0 - specfun::marcum_q1(std::sqrt(2.0 * k), b);
}

double ratio_pdf_z(double z, double k_sp, double gbar_s, double gbar_sp)
{
    if (z < 0.0 || !std::isfinite(z))
        throw std::domain_error("ratio_pdf_z: z must be >= 0");
    if (k_sp < 0.0)
        throw std::domain_error("ratio_pdf_z: k_sp must be >= 0");
    const double k1 = 1.0 + k_sp;
    const double r = gbar_sp / gbar_s;
    const double denom = k1 + z * r;
    const double expo = -k_sp + k_sp * k1 / denom;
    return k1 * r * std::exp(expo) * (k1 * k1 + z * r) / (denom * denom * denom);
}

double inverse_exponential_pdf_z(double z, double gbar_s, double gbar_sp)
{
    if (!(z > 0.0) || !std::isfinite(z))
        throw std::domain_error("inverse_exponential_pdf_z: z must be > 0");
    const double c = gbar_s / gbar_sp;
    return c / (z * z) * std::exp(-c / z);
}

double rician_envelope_variance(const ChannelSpec& spec)
{
    const double k = spec.k_factor;
    const double g = spec.avg_power;
    const double lag = specfun::laguerre_half(-k / (2.0 * g));
    return 2.0 * g / (k + 1.0) + k / (k + 1.0) - M_PI * g / (2.0 * (k + 1.0)) * lag * lag;
}

double rician_envelope_variance_mc(const ChannelSpec& spec, std::uint64_t runs, Philox& rng)
{
    double sum = 0.0, sum_sq = 0.0;
    for (std::uint64_t i = 0; i < runs; ++i) {
        const double env = std::abs(sample_rician(spec, rng));
        sum += env;
        sum_sq += env * env;
    }
    const double n = static_cast<double>(runs);
    const double mean = sum / n;
    return sum_sq / n - mean * mean;
}

EnvelopeVarianceReport envelope_variance_report(const ChannelSpec& spec, std::uint64_t runs,
                                                Philox& rng)
{
    EnvelopeVarianceReport rep;
    rep.closed_form = rician_envelope_variance(spec);
    rep.monte_carlo = rician_envelope_variance_mc(spec, runs, rng);
    const double scale = std::max(std::abs(rep.monte_carlo), 1e-12);
    rep.agrees_5pct = std::abs(rep.closed_form - rep.monte_carlo) <= 0.05 * scale;
    return rep;
}

ChannelTriple sample_triple(const SystemSpec& system, Philox& rng)
{
    ChannelTriple t;
    t.gamma_s = std::norm(sample_rician(system.su_su, rng));
    t.gamma_sp = std::norm(sample_rician(system.su_pu, rng));
    t.gamma_ps = std::norm(sample_rician(system.pu_su, rng));
    return t;
}

} // namespace crsim::channels
