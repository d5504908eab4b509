#pragma once

#include <json.hpp>

#include "zagreb/enumerate.hpp"
#include "zagreb/verify.hpp"

namespace zagreb {

inline constexpr int kReportSchema = 1;

/// Wall-clock fields are the only non-deterministic members; they are named
/// "wall_seconds" so callers can strip them before comparing.
nlohmann::json to_json(const ExtremalReport& report);
nlohmann::json to_json(const VerdictReport& report);

/// Removes every "wall_seconds" member, recursively.
nlohmann::json without_timing(nlohmann::json doc);

/// CSV row for an extremal report; columns match extremal_csv_header().
std::string extremal_csv_header();
std::string extremal_csv_row(const ExtremalReport& report);

}  // namespace zagreb
