/*
 * Copyright (c) 2026 crsim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef CRSIM_STATS_HPP
#define CRSIM_STATS_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace crsim {

/// One-sample Kolmogorov-Smirnov statistic sup |F_n(x) - F(x)| against the
/// given cdf. The sample is copied and sorted.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

/// Pearson chi-square statistic of `samples` (expected uniform on [0,1))
/// against `bins` equiprobable bins. Degrees of freedom: bins - 1.
double chi_square_uniform(const std::vector<double>& samples, int bins);

double pearson_correlation(const std::vector<double>& a, const std::vector<double>& b);

/// Streaming mean/variance accumulator; blocks merge in index order so
/// parallel reductions stay bit-stable for a fixed block layout.
struct RunningStat {
    std::uint64_t n = 0;
    double sum = 0.0;
    double sum_sq = 0.0;

    void add(double x)
    {
        ++n;
        sum += x;
        sum_sq += x * x;
    }
    void merge(const RunningStat& o)
    {
        n += o.n;
        sum += o.sum;
        sum_sq += o.sum_sq;
    }
    double mean() const { return n ? sum / static_cast<double>(n) : 0.0; }
    double variance() const;
    double std_error() const;
};

} // namespace crsim

#endif
