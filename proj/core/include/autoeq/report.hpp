#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "autoeq/model.hpp"
#include "autoeq/sweep.hpp"

namespace autoeq {

inline constexpr std::string_view kSweepCsvHeader = "a_auto,l_star,wage,f_star,profit,k_old,k_auto,pct_capital_auto";

/// Shortest-round-trip-safe decimal: 17 significant digits.
std::string format_number(double value);

/// One data row of a sweep CSV, in header order.
using CsvRow = std::array<double, 8>;

CsvRow csv_fields(const EquilibriumPoint& point);

/// Header, one row per point, then a `#` block with the sweep statistics.
/// Throws std::ios_base::failure if the sink fails.
void write_sweep_csv(const SweepResult& result, std::ostream& sink);

/// Reads the data rows back; comment lines are skipped.
std::vector<CsvRow> read_sweep_csv(std::istream& source);

/// Same fields as the CSV: {"points": [...], "stats": {...}}.
void write_sweep_json(const SweepResult& result, std::ostream& sink);
void write_point_json(const EquilibriumPoint& point, std::ostream& sink);
void write_point_csv(const EquilibriumPoint& point, std::ostream& sink);

}  // namespace autoeq
