/*
 * Copyright (c) 2026 crsim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef CRSIM_TABLE_HPP
#define CRSIM_TABLE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace crsim {

using Cell = std::variant<double, std::int64_t, std::string>;

/// Tabular experiment output. The schema is an ordered list of column names
/// (units carried as suffixes, e.g. capacity_bps_hz); metadata echoes the
/// configuration and is emitted as leading '#' comment lines. Formatting is
/// fixed so that identical runs produce byte-identical files.
struct ResultTable {
    std::vector<std::string> schema;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, std::string>> metadata;

    void add_row(std::vector<Cell> row);
    /// RFC-4180 style body with '#'-prefixed metadata header.
    void write_csv(std::ostream& out) const;
    std::string to_csv() const;
};

std::string format_cell(const Cell& cell);

} // namespace crsim

#endif
