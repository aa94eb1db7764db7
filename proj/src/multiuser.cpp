/*
 * Copyright (c) 2026 crsim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "crsim/multiuser.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "crsim/errors.hpp"
#include "crsim/parallel.hpp"
#include "crsim/specfun.hpp"
#include "crsim/stats.hpp"

namespace crsim::multiuser {

namespace {

constexpr double kGammaFloor = 1e-12;

double pair_sinr(const channels::ChannelTriple& t, double q_p, double gbar_p)
{
    const double gsp = std::max(t.gamma_sp, kGammaFloor);
    return t.gamma_s * (q_p / gsp) / (1.0 + gbar_p * t.gamma_ps);
}

// One ensemble per pair: pairs are i.i.d. but each has its own fixed
// line-of-sight phase structure.
std::vector<rab::LinkEnsemble> make_ensembles(const PacNetwork& net,
                                              const capacity::McContext& ctx)
{
    std::vector<rab::LinkEnsemble> ensembles;
    if (!net.rab_config)
        return ensembles;
    ensembles.reserve(static_cast<std::size_t>(net.n_pairs));
    for (int p = 0; p < net.n_pairs; ++p) {
        Philox phase_rng(ctx.seed, ctx.stream_base + 0xF00000 + static_cast<std::uint64_t>(p));
        ensembles.emplace_back(*net.rab_config, net.pair_spec, phase_rng, net.scatter);
    }
    return ensembles;
}

} // namespace

void PacNetwork::validate() const
{
    if (n_pairs < 1)
        throw std::invalid_argument("PacNetwork: n_pairs must be >= 1");
    pair_spec.validate();
    if (!(q_p > 0.0) || !std::isfinite(q_p))
        throw std::invalid_argument("PacNetwork: q_p must be finite and > 0");
    if (rab_config)
        rab_config->validate();
}

ScheduleResult schedule(std::span<const channels::ChannelTriple> snapshot, double q_p,
                        double gbar_p)
{
    if (snapshot.empty())
        throw std::invalid_argument("schedule: empty snapshot");
    ScheduleResult best{0, pair_sinr(snapshot[0], q_p, gbar_p)};
    for (std::size_t n = 1; n < snapshot.size(); ++n) {
        const double sinr = pair_sinr(snapshot[n], q_p, gbar_p);
        if (sinr > best.sinr) {
            best.index = static_cast<int>(n);
            best.sinr = sinr;
        }
    }
    return best;
}

double md_gain_reference(int n, std::uint64_t runs, const capacity::McContext& ctx)
{
    if (n < 1)
        throw std::invalid_argument("md_gain_reference: n must be >= 1");
    const std::uint64_t blocks = (runs + ctx.block_size - 1) / ctx.block_size;
    std::vector<double> partial(blocks, 0.0);
    parallel_for_blocks(blocks, ctx.workers, [&](std::uint64_t b) {
        Philox rng = ctx.block_rng(b);
        const std::uint64_t lo = b * ctx.block_size;
        const std::uint64_t hi = std::min<std::uint64_t>(runs, lo + ctx.block_size);
        double sum = 0.0;
        for (std::uint64_t i = lo; i < hi; ++i) {
            double best = 0.0;
            for (int k = 0; k < n; ++k)
                best = std::max(best, rng.exponential(1.0));
            sum += best;
        }
        partial[b] = sum;
    });
    double total = 0.0;
    for (double s : partial)
        total += s;
    return total / static_cast<double>(runs);
}

PacGain pac_gain(const PacNetwork& network, std::uint64_t runs, const capacity::McContext& ctx)
{
    network.validate();
    const auto ensembles = make_ensembles(network, ctx);
    const double gbar_p = network.pair_spec.pu_tx_power;

    struct Sums {
        double num = 0.0, den = 0.0;
        double num_sq = 0.0, den_sq = 0.0, cross = 0.0;
        std::uint64_t n = 0;
    };
    const std::uint64_t blocks = (runs + ctx.block_size - 1) / ctx.block_size;
    std::vector<Sums> partial(blocks);
    parallel_for_blocks(blocks, ctx.workers, [&](std::uint64_t b) {
        Philox rng = ctx.block_rng(b);
        const std::uint64_t lo = b * ctx.block_size;
        const std::uint64_t hi = std::min<std::uint64_t>(runs, lo + ctx.block_size);
        Sums s;
        std::vector<channels::ChannelTriple> snapshot(static_cast<std::size_t>(network.n_pairs));
        for (std::uint64_t i = lo; i < hi; ++i) {
            for (int p = 0; p < network.n_pairs; ++p)
                snapshot[static_cast<std::size_t>(p)] =
                    ensembles.empty() ? channels::sample_triple(network.pair_spec, rng)
                                      : ensembles[static_cast<std::size_t>(p)].sample_triple(rng);
            const ScheduleResult sched = schedule(snapshot, network.q_p, gbar_p);
            const double fixed = pair_sinr(snapshot[0], network.q_p, gbar_p);
            s.num += sched.sinr;
            s.den += fixed;
            s.num_sq += sched.sinr * sched.sinr;
            s.den_sq += fixed * fixed;
            s.cross += sched.sinr * fixed;
            ++s.n;
        }
        partial[b] = s;
    });
    Sums total;
    for (const auto& s : partial) {
        total.num += s.num;
        total.den += s.den;
        total.num_sq += s.num_sq;
        total.den_sq += s.den_sq;
        total.cross += s.cross;
        total.n += s.n;
    }
    const double n = static_cast<double>(total.n);
    const double mn = total.num / n, md = total.den / n;
    PacGain g;
    g.gain = mn / md;
    // Delta method on the ratio of means with common slots.
    const double vn = total.num_sq / n - mn * mn;
    const double vd = total.den_sq / n - md * md;
    const double cv = total.cross / n - mn * md;
    const double rel_var = vn / (mn * mn) + vd / (md * md) - 2.0 * cv / (mn * md);
    g.std_err = std::abs(g.gain) * std::sqrt(std::max(rel_var, 0.0) / n);
    return g;
}

double theorem2_bound(int n, double k_s, double k_sp, double k_ps)
{
    if (n < 2)
        throw std::invalid_argument("theorem2_bound: n must be >= 2");
    const double ln_n = std::log(static_cast<double>(n));
    const double num = std::pow(std::sqrt(ln_n / (k_s + 1.0)) + std::sqrt(k_s / (k_s + 1.0)), 2) +
                       std::log(ln_n);
    // Denominator factors keep only the extreme-value scale of the minimum;
    // the printed remainder term is dropped (it is the expansion artifact of
    // log log(N/(N-1)) and would reverse the documented N^2 log N limit).
    const auto factor = [&](double k) {
        const double root =
            std::sqrt(1.0 / (static_cast<double>(n) * (k + 1.0))) + std::sqrt(k / (k + 1.0));
        return root * root;
    };
    return num / (factor(k_sp) * factor(k_ps));
}

double theorem3_bound(int n, double k_s, int m_t, int m_r)
{
    if (n < 2)
        throw std::invalid_argument("theorem3_bound: n must be >= 2");
    if (m_t < 1 || m_r < 1)
        throw std::invalid_argument("theorem3_bound: m_t and m_r must be >= 1");
    const double ln_n = std::log(static_cast<double>(n));
    const double mm = static_cast<double>(m_t) * static_cast<double>(m_r);
    const double core = std::pow(
        std::sqrt(ln_n / (k_s + 1.0)) + std::sqrt(mm * k_s / (k_s + 1.0)), 2);
    return static_cast<double>(n) * static_cast<double>(n) * (core + std::log(ln_n));
}

double extreme_min_scale(int n, const channels::ChannelSpec& spec)
{
    if (n < 2)
        throw std::invalid_argument("extreme_min_scale: n must be >= 2");
    spec.validate();
    const double target = 1.0 / static_cast<double>(n);
    const auto cdf = [&](double g) { return channels::rician_power_cdf(g, spec); };
    double lo = 0.0, hi = spec.avg_power;
    int expand = 0;
    while (cdf(hi) < target) {
        hi *= 2.0;
        if (++expand > 200)
            throw NumericalError("extreme_min_scale: failed to bracket the quantile");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (cdf(mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<ScalingPoint> scaling_curve(const PacNetwork& network, const std::vector<int>& n_list,
                                        std::uint64_t runs, const capacity::McContext& ctx)
{
    network.validate();
    if (!std::is_sorted(n_list.begin(), n_list.end()))
        throw std::invalid_argument("scaling_curve: n_list must be ascending");
    const double gbar_p = network.pair_spec.pu_tx_power;

    const auto capacity_at = [&](int n, std::uint64_t stream_sub) {
        PacNetwork net = network;
        net.n_pairs = n;
        capacity::McContext sub_ctx = ctx;
        sub_ctx.stream_base = ctx.stream_base + (stream_sub << 24);
        const auto ensembles = make_ensembles(net, sub_ctx);
        const std::uint64_t blocks = (runs + ctx.block_size - 1) / ctx.block_size;
        std::vector<RunningStat> partial(blocks);
        parallel_for_blocks(blocks, ctx.workers, [&](std::uint64_t b) {
            Philox rng = sub_ctx.block_rng(b);
            const std::uint64_t lo = b * ctx.block_size;
            const std::uint64_t hi = std::min<std::uint64_t>(runs, lo + ctx.block_size);
            RunningStat stat;
            std::vector<channels::ChannelTriple> snapshot(static_cast<std::size_t>(n));
            for (std::uint64_t i = lo; i < hi; ++i) {
                for (int p = 0; p < n; ++p)
                    snapshot[static_cast<std::size_t>(p)] =
                        ensembles.empty()
                            ? channels::sample_triple(net.pair_spec, rng)
                            : ensembles[static_cast<std::size_t>(p)].sample_triple(rng);
                const ScheduleResult sched = schedule(snapshot, net.q_p, gbar_p);
                stat.add(std::log2(1.0 + sched.sinr));
            }
            partial[b] = stat;
        });
        RunningStat total;
        for (const auto& s : partial)
            total.merge(s);
        return total;
    };

    const RunningStat base = capacity_at(1, 0);
    const double c1 = base.mean();
    std::vector<ScalingPoint> points;
    points.reserve(n_list.size());
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        const int n = n_list[i];
        const RunningStat stat = capacity_at(n, i + 1);
        ScalingPoint pt;
        pt.n = n;
        pt.capacity = stat.mean();
        pt.std_err = stat.std_error();
        pt.norm_capacity = pt.capacity / c1;
        const double ln_n = std::log(static_cast<double>(n));
        pt.norm_log = n > 1 ? pt.norm_capacity / ln_n : std::numeric_limits<double>::quiet_NaN();
        pt.norm_loglog = n > 2 ? pt.norm_capacity / std::log(ln_n)
                               : std::numeric_limits<double>::quiet_NaN();
        points.push_back(pt);
    }
    return points;
}

ResultTable capacity_scaling_experiment(const std::string& scenario_label,
                                        const PacNetwork& network,
                                        const std::vector<int>& n_list, std::uint64_t runs,
                                        const capacity::McContext& ctx)
{
    ResultTable table;
    table.schema = {"n",          "scenario",       "rab_mt",
                    "rab_mr",     "norm_capacity",  "norm_by_logN",
                    "norm_by_loglogN", "std_err_bps_hz"};
    const auto points = scaling_curve(network, n_list, runs, ctx);
    const std::int64_t m_t = network.rab_config ? network.rab_config->m_t : 1;
    const std::int64_t m_r = network.rab_config ? network.rab_config->m_r : 1;
    for (const auto& pt : points)
        table.add_row({static_cast<std::int64_t>(pt.n), scenario_label, m_t, m_r,
                       pt.norm_capacity, pt.norm_log, pt.norm_loglog, pt.std_err});
    return table;
}

} // namespace crsim::multiuser
