/*
 * Copyright (c) 2026 crsim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef CRSIM_RAB_HPP
#define CRSIM_RAB_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <limits>
#include <optional>

#include "crsim/channels.hpp"
#include "crsim/rng.hpp"

namespace crsim::rab {

enum class ReceiveMode {
    random, // independent uniform phases on every receive pattern
    smart   // receive phases matched to the secondary-link superposition
};

struct RabConfig {
    int m_t = 1; // transmit basis patterns
    int m_r = 1; // receive basis patterns
    ReceiveMode receive_mode = ReceiveMode::random;

    void validate() const;
};

/// Deterministic line-of-sight beamspace matrix: entry (m, l) couples
/// transmit pattern l to receive pattern m with value sqrt(gbar) e^{j phi},
/// so every entry has modulus sqrt(gbar). The phases depend only on the
/// antenna structure and stay fixed across slots.
struct LosBeamspaceMatrix {
    Eigen::MatrixXcd entries; // M_R x M_T

    static LosBeamspaceMatrix from_phases(const Eigen::MatrixXd& phases, double avg_power);
    static LosBeamspaceMatrix draw(int m_r, int m_t, double avg_power, Philox& rng);
    void validate(double avg_power) const;
};

/// One slot of the discrete scattering environment: gains beta_q with total
/// power avg_power (CN(0, avg_power/Q) each) and unit-variance pattern
/// response coefficients toward each scatterer. With these conventions the
/// raw bilinear form w_R^T (Phi_R H_b Phi_T^H) w_T has mean power avg_power
/// for any unit-norm weight vectors.
struct ScattererSet {
    Eigen::VectorXcd gains;      // length Q
    Eigen::MatrixXcd response_r; // M_R x Q
    Eigen::MatrixXcd response_t; // M_T x Q

    static ScattererSet draw(int count, int m_r, int m_t, double avg_power, Philox& rng);
};

/// Unit-power random weights: entries e^{j theta_i}/sqrt(m), theta_i i.i.d.
/// uniform on [0, 2 pi).
Eigen::VectorXcd draw_weights(int m, Philox& rng);

Eigen::VectorXcd weights_from_phases(const Eigen::VectorXd& phases);

/// Equivalent channel of one slot,
///   h_eq = w_R^T ( sqrt(K/(K+1)) Hbar + 1/sqrt(K+1) Phi_R H_b Phi_T^H ) w_T.
/// Receive weights enter un-conjugated: a weight entry e^{j theta}/sqrt(M_R)
/// contributes phase +theta, which is the convention the smart receive mode
/// relies on. Single-antenna endpoints are the m = 1 case with unit weight.
std::complex<double> equivalent_channel(const RabConfig& cfg, const channels::ChannelSpec& spec,
                                        const LosBeamspaceMatrix& los, const ScattererSet& scat,
                                        const Eigen::VectorXcd& w_r, const Eigen::VectorXcd& w_t);

/// The line-of-sight part alone,
///   U = sqrt(K gbar / ((K+1) M_T M_R)) sum_{l,m} e^{j(theta_R,m + theta_T,l + phi^{l,m})}.
std::complex<double> artificial_fading_component(const RabConfig& cfg,
                                                 const channels::ChannelSpec& spec,
                                                 const LosBeamspaceMatrix& los,
                                                 const Eigen::VectorXcd& w_r,
                                                 const Eigen::VectorXcd& w_t);

/// Receive phases theta_R,m = -arg(a_m) that turn the artificial fading into
/// the coherent sum sum_m |a_m| (real, non-negative). a_m is the
/// superposition of the transmit patterns toward receive pattern m.
Eigen::VectorXd smart_receive_weights(const Eigen::VectorXcd& a);

/// a_m = sum_l e^{j(theta_T,l + phi^{l,m})} for the given line-of-sight
/// phases and transmit weights.
Eigen::VectorXcd smart_superposition(const LosBeamspaceMatrix& los, double avg_power,
                                     const Eigen::VectorXcd& w_t);

inline constexpr int kRayleighLimitPatterns = std::numeric_limits<int>::max();

struct NullingProbability {
    double epsilon_closed = 0.0; // NaN when no closed form exists for m_t
    double epsilon_mc = 0.0;
};

/// Probability that the artificial fading magnitude of the transmit-side
/// interference link falls below delta. Closed forms: the arcsine law for
/// m_t = 2 and the Rayleigh limit for m_t = kRayleighLimitPatterns; a Monte
/// Carlo estimate over mc_draws slots is always returned alongside.
NullingProbability nulling_probability(int m_t, double k_factor, double gbar, double delta,
                                       std::uint64_t mc_draws, Philox& rng);

/// How the scattered component is generated by the system-level samplers.
/// `gaussian` draws the rich-scattering limit CN(0, gbar/(K+1)) directly;
/// `discrete` sums an explicit ScattererSet every slot.
enum class ScatterModel { gaussian, discrete };

/// Per-slot sampler for the three links of one secondary pair under RAB.
/// The transmit phase draw is shared by the SU-SU and SU-PU links and the
/// receive phase draw by the SU-SU and PU-SU links, as in the signal model.
/// Line-of-sight phases are drawn once at construction from the provided
/// stream and then held fixed.
class LinkEnsemble {
public:
    LinkEnsemble(const RabConfig& cfg, const channels::SystemSpec& system, Philox& phase_rng,
                 ScatterModel scatter = ScatterModel::gaussian, int scatterer_count = 128);

    struct SlotGains {
        std::complex<double> h_s;
        std::complex<double> h_sp;
        std::complex<double> h_ps;
    };

    SlotGains sample_links(Philox& rng) const;
    channels::ChannelTriple sample_triple(Philox& rng) const;

    const RabConfig& config() const { return cfg_; }
    const channels::SystemSpec& system() const { return system_; }
    const Eigen::MatrixXd& los_phases_s() const { return phase_s_; }

private:
    RabConfig cfg_;
    channels::SystemSpec system_;
    Eigen::MatrixXd phase_s_;  // M_R x M_T
    Eigen::VectorXd phase_sp_; // M_T (single-antenna primary receiver)
    Eigen::VectorXd phase_ps_; // M_R (single-antenna primary transmitter)
    ScatterModel scatter_;
    int scatterer_count_;

    std::complex<double> scattered(double k_factor, double avg_power, int rows, int cols,
                                   const Eigen::VectorXcd& w_r, const Eigen::VectorXcd& w_t,
                                   Philox& rng) const;
};

} // namespace crsim::rab

#endif
