#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "enscast/series.hpp"

namespace enscast {

/// Loads an M4-format CSV: header row, then one series per row as
/// id,v1,v2,...; trailing empty cells end the series; the frequency
/// comes from the id prefix (Y/Q/M/W/D/H). Quoted ids are accepted.
/// Malformed cells raise std::runtime_error naming the line.
std::vector<TimeSeries> load_m4_csv(const std::string& path);
std::vector<TimeSeries> load_m4_csv(std::istream& in, const std::string& source_name);

/// Writes series back in the same M4 layout (used for round-trips and
/// synthetic corpora).
std::string to_m4_csv(const std::vector<TimeSeries>& series);

/// Formats a value with 6 significant digits (round-half-even),
/// the convention for all emitted numbers.
std::string format_number(double value);

}  // namespace enscast
