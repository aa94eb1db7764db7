/*
 * Copyright (c) 2026 crsim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "crsim/power_capacity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "crsim/errors.hpp"
#include "crsim/parallel.hpp"
#include "crsim/quadrature.hpp"
#include "crsim/specfun.hpp"
#include "crsim/stats.hpp"

namespace crsim::capacity {

namespace {

constexpr double kGammaSpFloor = 1e-12; // Rician/Rayleigh power is a.s. positive

std::uint64_t block_count(std::uint64_t runs, std::uint64_t block_size)
{
    return (runs + block_size - 1) / block_size;
}

} // namespace

void InterferenceConstraints::validate() const
{
    if (!(q_av > 0.0) || !std::isfinite(q_av))
        throw std::invalid_argument("InterferenceConstraints: q_av must be finite and > 0");
    if (!(q_p >= q_av))
        throw std::invalid_argument("InterferenceConstraints: q_p must be >= q_av");
}

double allocate_power(const channels::ChannelTriple& gamma, const PowerPolicy& policy)
{
    const double gsp = std::max(gamma.gamma_sp, kGammaSpFloor);
    const double gs = gamma.gamma_s;
    const double depth = gamma.gamma_ps * policy.pu_tx_power + 1.0;
    const double level = policy.water_level();

    double p = level / gsp - depth / gs; // water-filling branch
    if (!(p > 0.0))
        return 0.0;
    const double q_p = policy.constraints.q_p;
    if (std::isfinite(q_p)) {
        double cap = q_p / gsp;
        // Keep the product P * gamma_sp at or below q_p in floating point.
        while (cap * gsp > q_p)
            cap = std::nextafter(cap, 0.0);
        if (p > cap)
            p = cap;
    }
    return std::min(p, policy.max_power);
}

PowerPolicy solve_lambda(const TripleSampler& sampler, const InterferenceConstraints& constraints,
                         std::uint64_t runs, const McContext& ctx)
{
    constraints.validate();
    if (runs < 10000)
        throw std::invalid_argument("solve_lambda: need at least 1e4 calibration samples");

    // Per sample the received interference depends on the water level w only
    // through y = (gamma_ps gbar_p + 1) gamma_sp / gamma_s:
    //   gamma_sp P = min(max(w - y, 0), q_p).
    // Freeze y over the calibration set, sort it, and the constraint function
    // becomes an exactly evaluable piecewise-linear monotone function of w.
    std::vector<double> y(runs);
    const std::uint64_t blocks = block_count(runs, ctx.block_size);
    parallel_for_blocks(blocks, ctx.workers, [&](std::uint64_t b) {
        Philox rng = ctx.block_rng(b);
        const std::uint64_t lo = b * ctx.block_size;
        const std::uint64_t hi = std::min(runs, lo + ctx.block_size);
        for (std::uint64_t i = lo; i < hi; ++i) {
            const channels::ChannelTriple t = sampler(rng);
            const double gsp = std::max(t.gamma_sp, kGammaSpFloor);
            y[i] = (t.gamma_ps * sampler.system.pu_tx_power + 1.0) * gsp / t.gamma_s;
        }
    });
    std::sort(y.begin(), y.end());
    std::vector<double> prefix(runs + 1, 0.0);
    for (std::uint64_t i = 0; i < runs; ++i)
        prefix[i + 1] = prefix[i] + y[i];

    const double q_p = constraints.q_p;
    const double n = static_cast<double>(runs);
    const auto achieved = [&](double w) {
        // sum over y < w of min(w - y, q_p)
        const auto cut_w = static_cast<std::uint64_t>(
            std::lower_bound(y.begin(), y.end(), w) - y.begin());
        if (!std::isfinite(q_p))
            return (w * static_cast<double>(cut_w) - prefix[cut_w]) / n;
        const auto cut_clip = static_cast<std::uint64_t>(
            std::lower_bound(y.begin(), y.end(), w - q_p) - y.begin());
        const double clipped = q_p * static_cast<double>(cut_clip);
        const double linear =
            w * static_cast<double>(cut_w - cut_clip) - (prefix[cut_w] - prefix[cut_clip]);
        return (clipped + linear) / n;
    };

    double w_lo = kLn2 * 1e-9, w_hi = 1.0 / (kLn2 * 1e-9); // lambda in [1e-9, 1e9]
    if (achieved(w_hi) < constraints.q_av * (1.0 - 1e-6))
        throw NumericalError("solve_lambda: average constraint unreachable at lambda = 1e-9 "
                             "(achievable maximum " + std::to_string(achieved(w_hi)) + ")");
    if (achieved(w_lo) > constraints.q_av)
        throw NumericalError("solve_lambda: constraint already exceeded at lambda = 1e9");
    for (int it = 0; it < 200; ++it) {
        const double w_mid = std::sqrt(w_lo * w_hi);
        if (achieved(w_mid) < constraints.q_av)
            w_lo = w_mid;
        else
            w_hi = w_mid;
    }
    const double w = 0.5 * (w_lo + w_hi);
    const double got = achieved(w);
    if (std::abs(got - constraints.q_av) > 1e-4 * constraints.q_av)
        throw NumericalError("solve_lambda: bisection stalled, achieved " + std::to_string(got) +
                             " vs q_av " + std::to_string(constraints.q_av));

    PowerPolicy policy;
    policy.lambda = 1.0 / (w * kLn2);
    policy.constraints = constraints;
    policy.pu_tx_power = sampler.system.pu_tx_power;
    return policy;
}

CapacityEstimate ergodic_capacity_mc(const TripleSampler& sampler, const PowerPolicy& policy,
                                     std::uint64_t runs, const McContext& ctx)
{
    const std::uint64_t blocks = block_count(runs, ctx.block_size);
    std::vector<RunningStat> partial(blocks);
    parallel_for_blocks(blocks, ctx.workers, [&](std::uint64_t b) {
        Philox rng = ctx.block_rng(b);
        const std::uint64_t lo = b * ctx.block_size;
        const std::uint64_t hi = std::min(runs, lo + ctx.block_size);
        RunningStat stat;
        for (std::uint64_t i = lo; i < hi; ++i) {
            const channels::ChannelTriple t = sampler(rng);
            const double p = allocate_power(t, policy);
            const double denom = t.gamma_ps * policy.pu_tx_power + 1.0;
            stat.add(std::log2(1.0 + t.gamma_s * p / denom));
        }
        partial[b] = stat;
    });
    RunningStat total;
    for (const auto& s : partial)
        total.merge(s);
    return {total.mean(), total.std_error()};
}

ConstraintCheck check_constraints(const TripleSampler& sampler, const PowerPolicy& policy,
                                  std::uint64_t runs, const McContext& ctx)
{
    const std::uint64_t blocks = block_count(runs, ctx.block_size);
    struct Partial {
        double sum = 0.0;
        std::uint64_t violations = 0;
        double max_peak = 0.0;
    };
    std::vector<Partial> partial(blocks);
    parallel_for_blocks(blocks, ctx.workers, [&](std::uint64_t b) {
        Philox rng = ctx.block_rng(b);
        const std::uint64_t lo = b * ctx.block_size;
        const std::uint64_t hi = std::min(runs, lo + ctx.block_size);
        Partial part;
        for (std::uint64_t i = lo; i < hi; ++i) {
            const channels::ChannelTriple t = sampler(rng);
            const double received = allocate_power(t, policy) * t.gamma_sp;
            part.sum += received;
            part.max_peak = std::max(part.max_peak, received);
            if (received > policy.constraints.q_p)
                ++part.violations;
        }
        partial[b] = part;
    });
    ConstraintCheck check;
    double sum = 0.0;
    for (const auto& p : partial) {
        sum += p.sum;
        check.peak_violations += p.violations;
        check.max_peak = std::max(check.max_peak, p.max_peak);
    }
    check.avg_interference = sum / static_cast<double>(runs);
    return check;
}

double capacity_semianalytic(const Density& f_z, const Density& f_gps, const PowerPolicy& policy,
                             double tol)
{
    const double w = policy.water_level();
    const double q_p = policy.constraints.q_p;

    const auto inner = [&](double gps) {
        const double depth = gps * policy.pu_tx_power + 1.0;
        const double z0 = depth / w;
        const double z1 =
            (std::isfinite(q_p) && w > q_p) ? depth / (w - q_p)
                                            : std::numeric_limits<double>::infinity();
        const auto rate_wf = [&](double z) { return std::log2(z / z0); };
        const auto rate_clip = [&](double z) { return std::log2(1.0 + q_p * z / depth); };
        if (f_z.is_point()) {
            const double z = f_z.point_location();
            if (z <= z0)
                return 0.0;
            return z <= z1 ? rate_wf(z) : rate_clip(z);
        }
        double value = 0.0;
        if (std::isfinite(z1)) {
            value += integrate([&](double z) { return rate_wf(z) * f_z(z); }, z0, z1, tol * 0.25);
            value += integrate_to_infinity([&](double z) { return rate_clip(z) * f_z(z); }, z1,
                                           tol * 0.25);
        } else {
            value += integrate_to_infinity([&](double z) { return rate_wf(z) * f_z(z); }, z0,
                                           tol * 0.25);
        }
        return value;
    };

    if (f_gps.is_point())
        return inner(f_gps.point_location());
    return integrate_to_infinity([&](double gps) { return inner(gps) * f_gps(gps); }, 0.0,
                                 tol * 0.5);
}

Lemma1Result lemma1_asymptotics(const PowerPolicy& policy, double gbar_s, double gbar_sp,
                                double gbar_ps, double gbar_p)
{
    if (std::isfinite(policy.constraints.q_p))
        throw std::invalid_argument("lemma1_asymptotics: requires an infinite peak constraint");
    Lemma1Result r;
    r.s = policy.lambda * kLn2 * (gbar_ps * gbar_p + 1.0) * gbar_sp / gbar_s;
    r.exact = specfun::exp_integral_e1(r.s) / kLn2;
    r.high_snr_bound = -std::log2(r.s) - specfun::kEulerGamma / kLn2;
    r.low_snr_bound = std::exp(-r.s) / (r.s * kLn2);
    return r;
}

double awgn_capacity(double q_av, double gbar_s, double gbar_sp, double gbar_ps, double gbar_p)
{
    return std::log2(1.0 + (q_av / gbar_sp) * gbar_s / (1.0 + gbar_p * gbar_ps));
}

} // namespace crsim::capacity
