/*
 * Copyright (c) 2026 crsim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef CRSIM_HARNESS_HPP
#define CRSIM_HARNESS_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "crsim/power_capacity.hpp"
#include "crsim/rng.hpp"
#include "crsim/table.hpp"

namespace crsim::harness {

inline constexpr const char* kVersion = "crsim 1.0.0";

/// Independent substream for (seed, stream_id); identical ids reproduce the
/// identical sequence.
inline Philox substream(std::uint64_t seed, std::uint64_t stream_id)
{
    return {seed, stream_id};
}

/// Declarative experiment description. dB-valued fields are converted to
/// linear once, at build time of the concrete pipeline structs. Unknown keys
/// and invalid combinations raise ConfigError naming the field.
struct ExperimentConfig {
    std::string id;
    std::uint64_t seed = 20260;
    std::uint64_t runs = 100000;
    std::string output_path; // empty: stdout
    int workers = 0;         // 0: CRSIM_WORKERS or hardware concurrency
    std::map<std::string, std::string> params; // flattened "section.key"

    static ExperimentConfig from_file(const std::string& path);
    static ExperimentConfig from_text(const std::string& text);
    /// Built-in figure preset (fig7..fig16) or the pattern-export preset.
    static ExperimentConfig preset(const std::string& id);

    // Typed parameter access with defaults; throws ConfigError on bad values.
    double get_double(const std::string& key, double fallback) const;
    std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    std::vector<int> get_int_list(const std::string& key, const std::vector<int>& fallback) const;
    bool has(const std::string& key) const { return params.count(key) != 0; }
};

std::vector<std::string> figure_ids();

/// Run one experiment to a table; deterministic for fixed (seed, runs)
/// irrespective of the worker count.
ResultTable run_experiment(const ExperimentConfig& cfg);

/// Convert a dB value to linear power.
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

} // namespace crsim::harness

#endif
