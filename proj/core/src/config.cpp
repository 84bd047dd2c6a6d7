#include "edgeprofiler/config.hpp"

#include <cmath>

namespace edgeprofiler {

namespace {

void require_positive_count(std::int64_t value, const char* field) {
    if (value < 1)
        throw ConfigError(std::string(field) + " must be >= 1, got " + std::to_string(value));
}

void require_positive_rate(double value, const char* field) {
    if (!(value > 0) || !std::isfinite(value))
        throw ConfigError(std::string(field) + " must be a positive finite number");
}

void require_utilization(double value, const char* field) {
    if (!(value > 0) || value > 1 || !std::isfinite(value))
        throw ConfigError(std::string(field) + " must be in (0, 1], got " + std::to_string(value));
}

void require_nonnegative(double value, const char* field) {
    if (value < 0 || !std::isfinite(value))
        throw ConfigError(std::string(field) + " must be >= 0");
}

} // namespace

void ModelConfig::validate() const {
    require_positive_count(layers, "layers");
    require_positive_count(hidden_dim, "hidden_dim");
    require_positive_count(intermediate_dim, "intermediate_dim");
    require_positive_count(attention_heads, "attention_heads");
    require_positive_count(vocab_size, "vocab_size");
    require_positive_count(seq_len, "seq_len");
    if (hidden_dim % attention_heads != 0)
        throw ConfigError("hidden_dim (" + std::to_string(hidden_dim) +
                          ") must be divisible by attention_heads (" +
                          std::to_string(attention_heads) + ")");
}

void PrecisionSpec::validate() const {
    require_positive_count(bits_per_element, "bits_per_element");
    // The four named presets are pinned to their standard widths; any other
    // name is a custom format and may use any positive width.
    static const std::map<std::string, std::int64_t> kNamed = {
        {"FP32", 32}, {"FP16", 16}, {"INT8", 8}, {"INT4", 4}};
    auto it = kNamed.find(name);
    if (it != kNamed.end() && bits_per_element != it->second)
        throw ConfigError("precision " + name + " must have bits_per_element = " +
                          std::to_string(it->second) + ", got " +
                          std::to_string(bits_per_element));
}

double HardwareConfig::effective_peak_flops(const PrecisionSpec& p) const {
    auto it = peak_flops_per_precision.find(p.name);
    return it != peak_flops_per_precision.end() ? it->second : peak_flops;
}

void HardwareConfig::validate() const {
    require_positive_rate(peak_flops, "peak_flops");
    require_positive_rate(mem_bw, "mem_bw");
    require_positive_rate(storage_bw, "storage_bw");
    require_positive_rate(h2d_bw, "h2d_bw");
    require_positive_rate(net_bw, "net_bw");
    require_utilization(u_compute, "u_compute");
    require_utilization(u_memory, "u_memory");
    require_utilization(u_storage, "u_storage");
    require_utilization(u_h2d, "u_h2d");
    require_utilization(u_net, "u_net");
    require_nonnegative(e_flop, "e_flop");
    require_nonnegative(e_byte, "e_byte");
    for (const auto& [precision, flops] : peak_flops_per_precision)
        if (!(flops > 0) || !std::isfinite(flops))
            throw ConfigError("peak_flops_per_precision[" + precision + "] must be positive");
}

} // namespace edgeprofiler
