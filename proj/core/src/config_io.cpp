#include "edgeprofiler/config_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "canonical_json.hpp"
#include "config_json.hpp"

namespace edgeprofiler {

ParsedConfig parse_config_text(const std::string& text, const std::string& origin) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    if (!j.is_object()) throw ConfigError(origin + ": top level must be a JSON object");
    if (!j.contains("kind") || !j.at("kind").is_string())
        throw ConfigError(origin + ": missing required string field 'kind'");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "model") return detail::model_from_json(j, origin);
    if (kind == "hardware") return detail::hardware_from_json(j, origin);
    if (kind == "precision") return detail::precision_from_json(j, origin);
    throw ConfigError(origin + ": kind must be 'model', 'hardware' or 'precision', got '" + kind +
                      "'");
}

ParsedConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path);
}

std::string serialize_config(const ModelConfig& m) {
    return detail::canonical_dump(detail::to_json_tree(m));
}

std::string serialize_config(const HardwareConfig& hw) {
    return detail::canonical_dump(detail::to_json_tree(hw));
}

std::string serialize_config(const PrecisionSpec& p) {
    return detail::canonical_dump(detail::to_json_tree(p));
}

} // namespace edgeprofiler
