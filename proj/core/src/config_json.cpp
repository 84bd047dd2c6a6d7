#include "config_json.hpp"

#include <algorithm>
#include <vector>

namespace edgeprofiler::detail {

namespace {

using nlohmann::ordered_json;

std::size_t edit_distance(const std::string& a, const std::string& b) {
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t prev = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            std::size_t cur = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                               prev + (a[i - 1] == b[j - 1] ? 0 : 1)});
            prev = cur;
        }
    }
    return row[b.size()];
}

// One parsed object with strict-schema accessors.
class StrictObject {
  public:
    StrictObject(const ordered_json& j, std::string origin)
        : j_(j), origin_(std::move(origin)) {
        if (!j_.is_object()) throw ConfigError(origin_ + ": expected a JSON object");
    }

    std::string require_string(const std::string& key) {
        const auto& v = get(key);
        if (!v.is_string()) throw ConfigError(origin_ + ": field '" + key + "' must be a string");
        return v.get<std::string>();
    }

    std::string optional_string(const std::string& key, const std::string& fallback) {
        if (!j_.contains(key)) return fallback;
        return require_string(key);
    }

    std::int64_t require_integer(const std::string& key) {
        const auto& v = get(key);
        if (!v.is_number_integer() && !v.is_number_unsigned())
            throw ConfigError(origin_ + ": field '" + key + "' must be an integer");
        return v.get<std::int64_t>();
    }

    std::int64_t optional_integer(const std::string& key, std::int64_t fallback) {
        if (!j_.contains(key)) return fallback;
        return require_integer(key);
    }

    double require_number(const std::string& key) {
        const auto& v = get(key);
        if (!v.is_number()) throw ConfigError(origin_ + ": field '" + key + "' must be a number");
        return v.get<double>();
    }

    double optional_number(const std::string& key, double fallback) {
        if (!j_.contains(key)) return fallback;
        return require_number(key);
    }

    std::map<std::string, double> optional_number_map(const std::string& key) {
        std::map<std::string, double> out;
        if (!j_.contains(key)) return out;
        const auto& v = get(key);
        if (!v.is_object())
            throw ConfigError(origin_ + ": field '" + key + "' must be an object of numbers");
        for (const auto& [k, entry] : v.items()) {
            if (!entry.is_number())
                throw ConfigError(origin_ + ": field '" + key + "." + k + "' must be a number");
            out[k] = entry.get<double>();
        }
        return out;
    }

    void reject_unknown_keys(const std::vector<std::string>& known) const {
        for (const auto& [key, value] : j_.items()) {
            (void)value;
            if (std::find(known.begin(), known.end(), key) != known.end()) continue;
            std::string msg = origin_ + ": unknown key '" + key + "'";
            std::size_t best = 4; // suggest only close misses
            std::string suggestion;
            for (const auto& k : known) {
                std::size_t d = edit_distance(key, k);
                if (d < best) {
                    best = d;
                    suggestion = k;
                }
            }
            if (!suggestion.empty()) msg += " (did you mean '" + suggestion + "'?)";
            throw ConfigError(msg);
        }
    }

  private:
    const ordered_json& get(const std::string& key) {
        if (!j_.contains(key)) throw ConfigError(origin_ + ": missing required field '" + key + "'");
        return j_.at(key);
    }

    const ordered_json& j_;
    std::string origin_;
};

const std::vector<std::string> kModelKeys = {
    "kind",            "name",       "layers",  "hidden_dim", "intermediate_dim",
    "attention_heads", "vocab_size", "seq_len", "provenance", "notes"};

const std::vector<std::string> kHardwareKeys = {
    "kind",   "name",      "peak_flops", "mem_bw",    "storage_bw", "h2d_bw",
    "net_bw", "u_compute", "u_memory",   "u_storage", "u_h2d",      "u_net",
    "e_flop", "e_byte",    "peak_flops_per_precision", "provenance", "notes"};

const std::vector<std::string> kPrecisionKeys = {"kind", "name", "bits_per_element", "provenance",
                                                 "notes"};

void check_kind(StrictObject& obj, const std::string& origin, const std::string& expected) {
    std::string kind = obj.optional_string("kind", expected);
    if (kind != expected)
        throw ConfigError(origin + ": expected kind '" + expected + "', got '" + kind + "'");
}

void check_provenance(const std::string& origin, const std::string& provenance) {
    if (provenance != "paper" && provenance != "assumed")
        throw ConfigError(origin + ": provenance must be 'paper' or 'assumed', got '" +
                          provenance + "'");
}

} // namespace

ordered_json to_json_tree(const ModelConfig& m) {
    ordered_json j;
    j["kind"] = "model";
    j["name"] = m.name;
    j["layers"] = m.layers;
    j["hidden_dim"] = m.hidden_dim;
    j["intermediate_dim"] = m.intermediate_dim;
    j["attention_heads"] = m.attention_heads;
    j["vocab_size"] = m.vocab_size;
    j["seq_len"] = m.seq_len;
    j["provenance"] = m.provenance;
    j["notes"] = m.notes;
    return j;
}

ordered_json to_json_tree(const HardwareConfig& hw) {
    ordered_json j;
    j["kind"] = "hardware";
    j["name"] = hw.name;
    j["peak_flops"] = hw.peak_flops;
    j["mem_bw"] = hw.mem_bw;
    j["storage_bw"] = hw.storage_bw;
    j["h2d_bw"] = hw.h2d_bw;
    j["net_bw"] = hw.net_bw;
    j["u_compute"] = hw.u_compute;
    j["u_memory"] = hw.u_memory;
    j["u_storage"] = hw.u_storage;
    j["u_h2d"] = hw.u_h2d;
    j["u_net"] = hw.u_net;
    j["e_flop"] = hw.e_flop;
    j["e_byte"] = hw.e_byte;
    if (!hw.peak_flops_per_precision.empty()) {
        ordered_json overrides;
        for (const auto& [name, flops] : hw.peak_flops_per_precision) overrides[name] = flops;
        j["peak_flops_per_precision"] = overrides;
    }
    j["provenance"] = hw.provenance;
    j["notes"] = hw.notes;
    return j;
}

ordered_json to_json_tree(const PrecisionSpec& p) {
    ordered_json j;
    j["kind"] = "precision";
    j["name"] = p.name;
    j["bits_per_element"] = p.bits_per_element;
    j["provenance"] = p.provenance;
    j["notes"] = p.notes;
    return j;
}

ModelConfig model_from_json(const ordered_json& j, const std::string& origin) {
    StrictObject obj(j, origin);
    check_kind(obj, origin, "model");
    obj.reject_unknown_keys(kModelKeys);
    ModelConfig m;
    m.name = obj.optional_string("name", "unnamed");
    m.layers = obj.require_integer("layers");
    m.hidden_dim = obj.require_integer("hidden_dim");
    m.intermediate_dim = obj.require_integer("intermediate_dim");
    m.attention_heads = obj.require_integer("attention_heads");
    m.vocab_size = obj.require_integer("vocab_size");
    m.seq_len = obj.optional_integer("seq_len", 2048);
    m.provenance = obj.optional_string("provenance", "assumed");
    m.notes = obj.optional_string("notes", "");
    check_provenance(origin, m.provenance);
    try {
        m.validate();
    } catch (const ConfigError& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    return m;
}

HardwareConfig hardware_from_json(const ordered_json& j, const std::string& origin) {
    StrictObject obj(j, origin);
    check_kind(obj, origin, "hardware");
    obj.reject_unknown_keys(kHardwareKeys);
    HardwareConfig hw;
    hw.name = obj.optional_string("name", "unnamed");
    hw.peak_flops = obj.require_number("peak_flops");
    hw.mem_bw = obj.require_number("mem_bw");
    hw.storage_bw = obj.require_number("storage_bw");
    hw.h2d_bw = obj.require_number("h2d_bw");
    hw.net_bw = obj.require_number("net_bw");
    hw.u_compute = obj.optional_number("u_compute", 1.0);
    hw.u_memory = obj.optional_number("u_memory", 1.0);
    hw.u_storage = obj.optional_number("u_storage", 1.0);
    hw.u_h2d = obj.optional_number("u_h2d", 1.0);
    hw.u_net = obj.optional_number("u_net", 1.0);
    hw.e_flop = obj.optional_number("e_flop", 0.0);
    hw.e_byte = obj.optional_number("e_byte", 0.0);
    hw.peak_flops_per_precision = obj.optional_number_map("peak_flops_per_precision");
    hw.provenance = obj.optional_string("provenance", "assumed");
    hw.notes = obj.optional_string("notes", "");
    check_provenance(origin, hw.provenance);
    try {
        hw.validate();
    } catch (const ConfigError& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    return hw;
}

PrecisionSpec precision_from_json(const ordered_json& j, const std::string& origin) {
    StrictObject obj(j, origin);
    check_kind(obj, origin, "precision");
    obj.reject_unknown_keys(kPrecisionKeys);
    PrecisionSpec p;
    p.name = obj.optional_string("name", "custom");
    p.bits_per_element = obj.require_integer("bits_per_element");
    p.provenance = obj.optional_string("provenance", "assumed");
    p.notes = obj.optional_string("notes", "");
    check_provenance(origin, p.provenance);
    try {
        p.validate();
    } catch (const ConfigError& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    return p;
}

} // namespace edgeprofiler::detail
