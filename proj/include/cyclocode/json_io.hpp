#pragma once

#include <json.hpp>

#include "cyclocode/report.hpp"

namespace cyclocode {

nlohmann::json bounds_to_json(const distance_bounds& b);
distance_bounds bounds_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const code_report& rep);
code_report report_from_json(const nlohmann::json& j);

}  // namespace cyclocode
