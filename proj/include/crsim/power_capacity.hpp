/*
 * Copyright (c) 2026 crsim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef CRSIM_POWER_CAPACITY_HPP
#define CRSIM_POWER_CAPACITY_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>

#include "crsim/channels.hpp"
#include "crsim/rab.hpp"
#include "crsim/rng.hpp"

namespace crsim::capacity {

inline constexpr double kLn2 = 0.69314718055994530942;

/// Average and peak caps on the interference power received by the primary.
/// q_p may be infinity (no peak constraint) but never below q_av.
struct InterferenceConstraints {
    double q_av = 1.0;
    double q_p = std::numeric_limits<double>::infinity();

    double rho() const { return q_p / q_av; }
    void validate() const;
};

/// Calibrated allocation policy: the Lagrange multiplier fixes the water
/// level 1/(lambda ln 2).
struct PowerPolicy {
    double lambda = 1.0;
    InterferenceConstraints constraints;
    double pu_tx_power = 1.0;
    double max_power = 1e15; // transmit cap applied only when gamma_sp underflows

    double water_level() const { return 1.0 / (lambda * kLn2); }
};

/// Optimal instantaneous transmit power: zero below the cutoff ratio,
/// water-filling between, and the peak clip Q_p/gamma_sp above. The returned
/// value always satisfies P >= 0 and P * gamma_sp <= Q_p.
double allocate_power(const channels::ChannelTriple& gamma, const PowerPolicy& policy);

/// Slot sampler shared by calibration and measurement: plain Rician links,
/// or RAB equivalent channels when an ensemble is attached.
struct TripleSampler {
    channels::SystemSpec system;
    std::optional<rab::LinkEnsemble> ensemble;

    channels::ChannelTriple operator()(Philox& rng) const
    {
        return ensemble ? ensemble->sample_triple(rng) : channels::sample_triple(system, rng);
    }
};

/// Seeding/worker context of one Monte Carlo stage. Block b of a stage draws
/// from the substream (seed, stream_base + b), so results do not depend on
/// the worker count.
struct McContext {
    std::uint64_t seed = 0;
    std::uint64_t stream_base = 0;
    int workers = 0; // 0: use crsim::worker_count()
    std::uint64_t block_size = 65536;

    Philox block_rng(std::uint64_t block) const { return {seed, stream_base + block}; }
};

/// Calibrate lambda so that the average received interference over a frozen
/// sample set of `runs` slots meets q_av (relative tolerance 1e-4; the
/// bisection is over a deterministic monotone function of the water level).
/// Throws NumericalError if the constraint is unreachable.
PowerPolicy solve_lambda(const TripleSampler& sampler, const InterferenceConstraints& constraints,
                         std::uint64_t runs, const McContext& ctx);

struct CapacityEstimate {
    double capacity = 0.0; // bps/Hz
    double std_err = 0.0;
};

/// Ergodic capacity E log2(1 + gamma_s P / (gamma_ps gbar_p + 1)) by Monte
/// Carlo on a sample set independent of the calibration set.
CapacityEstimate ergodic_capacity_mc(const TripleSampler& sampler, const PowerPolicy& policy,
                                     std::uint64_t runs, const McContext& ctx);

/// Achieved average interference and peak violations of a policy on a fresh
/// sample set (constraint verification).
struct ConstraintCheck {
    double avg_interference = 0.0;
    std::uint64_t peak_violations = 0;
    double max_peak = 0.0;
};
ConstraintCheck check_constraints(const TripleSampler& sampler, const PowerPolicy& policy,
                                  std::uint64_t runs, const McContext& ctx);

/// Density argument of the semi-analytic capacity: either a continuous pdf
/// on [0, inf) or a point mass (the hardened-channel limit).
class Density {
public:
    static Density continuous(std::function<double(double)> pdf)
    {
        Density d;
        d.pdf_ = std::move(pdf);
        return d;
    }
    static Density point(double x)
    {
        Density d;
        d.point_ = x;
        return d;
    }
    bool is_point() const { return point_.has_value(); }
    double point_location() const { return *point_; }
    double operator()(double x) const { return pdf_(x); }

private:
    std::function<double(double)> pdf_;
    std::optional<double> point_;
};

/// Double quadrature of the ergodic capacity: outer over gamma_ps, inner
/// over z = gamma_s/gamma_sp across the water-filling region and (when the
/// peak constraint is active) the clipped region. Absolute tolerance tol.
double capacity_semianalytic(const Density& f_z, const Density& f_gps, const PowerPolicy& policy,
                             double tol);

/// Hardened-limit capacity forms around the exponential integral:
/// exact = E1(s)/ln 2 with s = lambda ln2 (gbar_ps gbar_p + 1) gbar_sp/gbar_s.
struct Lemma1Result {
    double exact = 0.0;
    double high_snr_bound = 0.0; // -log2(s) - gamma/ln 2, asymptote as s -> 0
    double low_snr_bound = 0.0;  // e^-s/(s ln 2), asymptote as s -> inf
    double s = 0.0;
};
Lemma1Result lemma1_asymptotics(const PowerPolicy& policy, double gbar_s, double gbar_sp,
                                double gbar_ps, double gbar_p);

/// log2(1 + (q_av/gbar_sp) gbar_s / (1 + gbar_p gbar_ps)): capacity when all
/// channels harden.
double awgn_capacity(double q_av, double gbar_s, double gbar_sp, double gbar_ps, double gbar_p);

} // namespace crsim::capacity

#endif
