/*
 * Copyright (c) 2026 crsim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef CRSIM_RNG_HPP
#define CRSIM_RNG_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

namespace crsim {

// Counter-based generator (Philox 4x64 with 10 rounds, same constants and
// output order as numpy's Philox bit generator). A stream is addressed by
// (seed, stream_id): distinct stream ids select distinct keys, so any
// substream can be constructed without generating its predecessors. The
// sequence for a given (seed, stream_id) is identical on every platform.
class Philox {
public:
    Philox(std::uint64_t seed, std::uint64_t stream_id) : key_{seed, stream_id} {}

    std::uint64_t next_u64()
    {
        if (index_ == 4) {
            refill();
            index_ = 0;
        }
        return buffer_[index_++];
    }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Uniform angle in [0, 2*pi).
    double angle() { return uniform() * 6.283185307179586476925286766559; }

    /// Circular complex Gaussian with E|v|^2 = variance (Box-Muller in polar form).
    std::complex<double> complex_normal(double variance)
    {
        const double r = std::sqrt(-std::log1p(-uniform()) * variance);
        const double t = angle();
        return {r * std::cos(t), r * std::sin(t)};
    }

    double normal() // N(0,1); consumes one uniform pair
    {
        const double r = std::sqrt(-2.0 * std::log1p(-uniform()));
        return r * std::cos(angle());
    }

    double exponential(double mean) { return -mean * std::log1p(-uniform()); }

    // UniformRandomBitGenerator interface
    using result_type = std::uint64_t;
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~static_cast<result_type>(0); }
    result_type operator()() { return next_u64(); }

private:
    void refill();

    std::array<std::uint64_t, 2> key_;
    std::array<std::uint64_t, 4> counter_{0, 0, 0, 0};
    std::array<std::uint64_t, 4> buffer_{};
    int index_ = 4;
};

} // namespace crsim

#endif
