#pragma once

#include <string>

#include <json.hpp>

#include "toricoh/fan.hpp"

namespace toricoh {

// Schema: {"dimension": int, "rays": [[int,...]], "max_cones": [[int,...]]}
// with 1-based ray indices in max_cones. Ray order is preserved.
nlohmann::json fan_to_json(const Fan& fan);
Fan fan_from_json(const nlohmann::json& j);

std::string fan_to_json_string(const Fan& fan);
Fan fan_from_json_string(const std::string& text);
Fan fan_from_file(const std::string& path);
void fan_to_file(const Fan& fan, const std::string& path);

}  // namespace toricoh
