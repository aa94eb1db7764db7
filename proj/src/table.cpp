/*
 * Copyright (c) 2026 crsim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "crsim/table.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace crsim {

std::string format_cell(const Cell& cell)
{
    char buf[64];
    if (std::holds_alternative<double>(cell)) {
        const double v = std::get<double>(cell);
        if (std::isnan(v))
            return "nan";
        if (std::isinf(v))
            return v > 0 ? "inf" : "-inf";
        std::snprintf(buf, sizeof buf, "%.10g", v);
        return buf;
    }
    if (std::holds_alternative<std::int64_t>(cell)) {
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(std::get<std::int64_t>(cell)));
        return buf;
    }
    return std::get<std::string>(cell);
}

void ResultTable::add_row(std::vector<Cell> row)
{
    if (row.size() != schema.size())
        throw std::invalid_argument("ResultTable: row arity does not match schema");
    rows.push_back(std::move(row));
}

void ResultTable::write_csv(std::ostream& out) const
{
    for (const auto& [key, value] : metadata)
        out << "# " << key << " = " << value << "\n";
    for (std::size_t c = 0; c < schema.size(); ++c)
        out << schema[c] << (c + 1 < schema.size() ? "," : "\n");
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << format_cell(row[c]) << (c + 1 < row.size() ? "," : "\n");
    }
}

std::string ResultTable::to_csv() const
{
    std::ostringstream ss;
    write_csv(ss);
    return ss.str();
}

} // namespace crsim
