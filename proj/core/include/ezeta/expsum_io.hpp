#pragma once

#include <string>
#include <string_view>

#include "ezeta/scenario.hpp"
#include "ezeta/transform.hpp"

namespace ezeta {

/// Scenario files are JSON objects with the ExpSumScenario field names:
///   {"qstar": [a, b, c], "delta0": .., "h": .., "k": .., "t": .., "T": ..,
///    "K": .., "N": .., "Nprime": .., "Delta": .., "constants": {...}}
/// "r" may be present; it must then match the derived value.
ExpSumScenario scenario_from_json(std::string_view text);
std::string scenario_to_json(const ExpSumScenario& sc);

std::string bound_report_json(const BoundReport& report, int indent = 2);
std::string bound_report_csv_header();
std::string bound_report_csv_row(const BoundReport& report);

}  // namespace ezeta
