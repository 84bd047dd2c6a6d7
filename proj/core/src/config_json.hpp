#pragma once

#include <json.hpp>

#include "edgeprofiler/config.hpp"

namespace edgeprofiler::detail {

// JSON-tree forms of the three config kinds, shared by the config files,
// the report "inputs" echo and the parsers behind both.
nlohmann::ordered_json to_json_tree(const ModelConfig& m);
nlohmann::ordered_json to_json_tree(const HardwareConfig& hw);
nlohmann::ordered_json to_json_tree(const PrecisionSpec& p);

// Strict parsers: unknown keys are hard errors with a closest-key
// suggestion; missing optional fields take documented defaults; invariants
// are validated before returning. `origin` names the file (or "<inline>")
// for error messages.
ModelConfig model_from_json(const nlohmann::ordered_json& j, const std::string& origin);
HardwareConfig hardware_from_json(const nlohmann::ordered_json& j, const std::string& origin);
PrecisionSpec precision_from_json(const nlohmann::ordered_json& j, const std::string& origin);

} // namespace edgeprofiler::detail
