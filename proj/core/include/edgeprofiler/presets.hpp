#pragma once

#include <string>
#include <vector>

#include "edgeprofiler/config.hpp"

namespace edgeprofiler {

// Built-in device, model and precision entries, each flagged with its
// provenance. The same entries ship as editable JSON files under presets/
// in the source tree; the compiled catalog is the operative copy so the
// binary needs no data files at runtime.
struct PresetCatalog {
    std::vector<HardwareConfig> devices;  // sorted by name
    std::vector<ModelConfig> models;      // sorted by name
    std::vector<PrecisionSpec> precisions; // sorted by name
};

const PresetCatalog& preset_catalog();

// Lookup by exact name; unknown names raise UnknownPresetError listing what
// is available.
HardwareConfig load_device_preset(const std::string& name);
ModelConfig load_model_preset(const std::string& name);
PrecisionSpec load_precision_preset(const std::string& name);

// Deterministic, alphabetically sorted text listing with provenance flags.
std::string format_preset_listing(const PresetCatalog& catalog);

} // namespace edgeprofiler
