/*
 * Copyright (c) 2026 crsim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "crsim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace crsim {

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf)
{
    if (samples.empty())
        throw std::invalid_argument("ks_statistic: empty sample");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double F = cdf(samples[i]);
        const double lo = F - static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n - F;
        d = std::max({d, lo, hi});
    }
    return d;
}

double chi_square_uniform(const std::vector<double>& samples, int bins)
{
    if (bins < 2 || samples.empty())
        throw std::invalid_argument("chi_square_uniform: need >= 2 bins and a non-empty sample");
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(bins), 0);
    for (double u : samples) {
        auto b = static_cast<std::int64_t>(u * bins);
        if (b < 0 || b >= bins)
            throw std::invalid_argument("chi_square_uniform: sample outside [0,1)");
        ++counts[static_cast<std::size_t>(b)];
    }
    const double expected = static_cast<double>(samples.size()) / bins;
    double stat = 0.0;
    for (auto c : counts) {
        const double diff = static_cast<double>(c) - expected;
        stat += diff * diff / expected;
    }
    return stat;
}

double pearson_correlation(const std::vector<double>& a, const std::vector<double>& b)
{
    if (a.size() != b.size() || a.empty())
        throw std::invalid_argument("pearson_correlation: size mismatch");
    const double n = static_cast<double>(a.size());
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= n;
    mb /= n;
    double cov = 0.0, va = 0.0, vb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double da = a[i] - ma, db = b[i] - mb;
        cov += da * db;
        va += da * da;
        vb += db * db;
    }
    return cov / std::sqrt(va * vb);
}

double RunningStat::variance() const
{
    if (n < 2)
        return 0.0;
    const double m = mean();
    const double v = (sum_sq - static_cast<double>(n) * m * m) / static_cast<double>(n - 1);
    return v > 0.0 ? v : 0.0;
}

double RunningStat::std_error() const
{
    return n ? std::sqrt(variance() / static_cast<double>(n)) : 0.0;
}

} // namespace crsim
