/*
 * Copyright (c) 2026 crsim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef CRSIM_CHANNELS_HPP
#define CRSIM_CHANNELS_HPP

#include <complex>
#include <cstdint>

#include "crsim/rng.hpp"

namespace crsim::channels {

/// One fading link. K-factor and average power are linear (the CLI converts
/// dB at config load); k_factor = 0 is Rayleigh, large K approaches a
/// deterministic line-of-sight gain.
struct ChannelSpec {
    double k_factor = 0.0;   // >= 0
    double avg_power = 1.0;  // gamma-bar > 0, noise density normalized to 1 W/Hz
    double los_phase = 0.0;  // radians

    void validate() const;
};

/// Joint realization of the three channel powers entering the power policy.
struct ChannelTriple {
    double gamma_s = 0.0;
    double gamma_sp = 0.0;
    double gamma_ps = 0.0;
};

/// The full point-to-point system: secondary link, both interference links,
/// and the primary transmit power (constant, linear).
struct SystemSpec {
    ChannelSpec su_su;
    ChannelSpec su_pu;
    ChannelSpec pu_su;
    double pu_tx_power = 1.0;

    void validate() const;
};

/// One complex gain draw h = sqrt(gbar) (sqrt(K/(K+1)) e^{j phi} + v),
/// v ~ CN(0, 1/(K+1)); E|h|^2 = gbar.
std::complex<double> sample_rician(const ChannelSpec& spec, Philox& rng);

/// Density of the channel power gamma = |h|^2.
double rician_power_pdf(double gamma, const ChannelSpec& spec);

/// Distribution function F(gamma) = 1 - Q1(sqrt(2K), sqrt(2(K+1) gamma/gbar)).
double rician_power_cdf(double gamma, const ChannelSpec& spec);

/// Density of z = gamma_s / gamma_sp with gamma_s exponential (mean gbar_s)
/// and gamma_sp a Rician power with K-factor k_sp and mean gbar_sp
/// (closed form; reduces to the log-logistic density at k_sp = 0).
double ratio_pdf_z(double z, double k_sp, double gbar_s, double gbar_sp);

/// Limiting density of z when the secondary link hardens: the reciprocal of
/// an exponential variable. Defined for z > 0.
double inverse_exponential_pdf_z(double z, double gbar_s, double gbar_sp);

/// Envelope variance in the literature's closed form
///   2 gbar/(K+1) + K/(K+1) - pi gbar/(2(K+1)) L_{1/2}^2(-K/(2 gbar)).
/// The formula mixes units across its terms (see envelope_variance_report);
/// the Monte Carlo estimate is the trusted value.
double rician_envelope_variance(const ChannelSpec& spec);

/// Sample variance of |h| over `runs` draws.
double rician_envelope_variance_mc(const ChannelSpec& spec, std::uint64_t runs, Philox& rng);

struct EnvelopeVarianceReport {
    double closed_form = 0.0;
    double monte_carlo = 0.0;
    bool agrees_5pct = false;
};

EnvelopeVarianceReport envelope_variance_report(const ChannelSpec& spec, std::uint64_t runs,
                                                Philox& rng);

/// Independent draw of the three channel powers of one slot.
ChannelTriple sample_triple(const SystemSpec& system, Philox& rng);

} // namespace crsim::channels

#endif
