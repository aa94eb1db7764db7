/*
 * Copyright (c) 2026 crsim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef CRSIM_MULTIUSER_HPP
#define CRSIM_MULTIUSER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "crsim/channels.hpp"
#include "crsim/power_capacity.hpp"
#include "crsim/rab.hpp"
#include "crsim/table.hpp"

namespace crsim::multiuser {

/// N i.i.d. secondary pairs sharing the primary band under a peak-only
/// constraint; at most one pair transmits per slot.
struct PacNetwork {
    int n_pairs = 1;
    channels::SystemSpec pair_spec;
    double q_p = 1.0;
    std::optional<rab::RabConfig> rab_config;
    rab::ScatterModel scatter = rab::ScatterModel::gaussian;

    void validate() const;
};

struct ScheduleResult {
    int index = 0;
    double sinr = 0.0;
};

/// Max-SINR scheduling over one snapshot: argmax of
/// gamma_s (q_p/gamma_sp) / (1 + gbar_p gamma_ps), ties to the lowest index.
ScheduleResult schedule(std::span<const channels::ChannelTriple> snapshot, double q_p,
                        double gbar_p);

/// Multiuser-diversity gain of the reference network (no primary):
/// E{max_n gamma_s,n}/gbar_s over Rayleigh links; approaches H_N.
double md_gain_reference(int n, std::uint64_t runs, const capacity::McContext& ctx);

struct PacGain {
    double gain = 0.0;
    double std_err = 0.0; // delta-method error of the ratio estimate
};

/// Combined diversity gain E{SINR of the scheduled pair}/E{SINR of pair 0},
/// estimated on common slots.
PacGain pac_gain(const PacNetwork& network, std::uint64_t runs, const capacity::McContext& ctx);

/// Growth-rate expressions with all O(.) constants set to one. The
/// denominator remainder terms are dropped (see the note in the
/// implementation); these bounds support trend and ratio tests only.
double theorem2_bound(int n, double k_s, double k_sp, double k_ps);
double theorem3_bound(int n, double k_s, int m_t, int m_r);

/// Extreme-value scale of the minimum: d_N = F^{-1}(1/N) of the Rician power
/// distribution, by bisection on the Marcum-Q form of the cdf.
double extreme_min_scale(int n, const channels::ChannelSpec& spec);

struct ScalingPoint {
    int n = 0;
    double capacity = 0.0;      // E log2(1 + SINR of the scheduled pair), bps/Hz
    double std_err = 0.0;
    double norm_capacity = 0.0; // capacity / capacity(N = 1)
    double norm_log = 0.0;      // norm_capacity / ln N
    double norm_loglog = 0.0;   // norm_capacity / ln ln N (nan at N <= 2)
};

/// Normalized sum-capacity curve across n_list (ascending). capacity(N=1) is
/// always measured internally with the same per-slot budget.
std::vector<ScalingPoint> scaling_curve(const PacNetwork& network, const std::vector<int>& n_list,
                                        std::uint64_t runs, const capacity::McContext& ctx);

/// Table form of the scaling experiment, schema
/// (n, scenario, rab_mt, rab_mr, norm_capacity, norm_by_logN, norm_by_loglogN, std_err).
ResultTable capacity_scaling_experiment(const std::string& scenario_label,
                                        const PacNetwork& network,
                                        const std::vector<int>& n_list, std::uint64_t runs,
                                        const capacity::McContext& ctx);

} // namespace crsim::multiuser

#endif
