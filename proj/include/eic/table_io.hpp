#pragma once

#include <iosfwd>
#include <json.hpp>
#include <string>

#include "eic/sweep.hpp"

namespace eic {

/// Locale-independent rendering with `digits` significant digits;
/// "nan", "inf", "-inf" for non-finite values.
std::string format_number(double x, int digits = 17);

/// `#`-prefixed metadata block, header row, then one line per grid point.
void write_csv(std::ostream& out, const SweepTable& table);
std::string to_csv(const SweepTable& table);

nlohmann::json to_json(const SweepTable& table);

}  // namespace eic
