#pragma once

#include <string>
#include <variant>

#include "edgeprofiler/config.hpp"

namespace edgeprofiler {

using ParsedConfig = std::variant<ModelConfig, HardwareConfig, PrecisionSpec>;

// Parses one JSON config with a top-level "kind" discriminator of "model",
// "hardware" or "precision". The schema is strict: unknown keys are hard
// errors (with a closest-key suggestion), missing optional fields take their
// documented defaults, and every invariant is checked before returning.
ParsedConfig parse_config_text(const std::string& text, const std::string& origin = "<inline>");
ParsedConfig parse_config_file(const std::string& path);

// Canonical JSON for each config kind; parse(serialize(x)) == x.
std::string serialize_config(const ModelConfig& m);
std::string serialize_config(const HardwareConfig& hw);
std::string serialize_config(const PrecisionSpec& p);

} // namespace edgeprofiler
