#include "edgeprofiler/latency.hpp"

#include <algorithm>
#include <cmath>

namespace edgeprofiler {

namespace {

// Bandwidths and utilizations are validated positive, but per-precision
// overrides or hand-built configs can still produce a dead denominator;
// that is a configuration mistake, not an infinite latency.
double checked_rate(double rate, double utilization, const char* what) {
    double denom = rate * utilization;
    if (!(denom > 0) || !std::isfinite(denom))
        throw ConfigError(std::string(what) + " throughput is zero or invalid");
    return denom;
}

} // namespace

std::string to_string(AggregationMode mode) {
    return mode == AggregationMode::serial ? "serial" : "overlapped";
}

AggregationMode aggregation_mode_from_string(const std::string& s) {
    if (s == "serial") return AggregationMode::serial;
    if (s == "overlapped") return AggregationMode::overlapped;
    throw ConfigError("unknown aggregation mode '" + s + "' (expected serial or overlapped)");
}

double compute_latency(const ModelConfig& m, const HardwareConfig& hw, const PrecisionSpec& p) {
    hw.validate();
    p.validate();
    double denom = checked_rate(hw.effective_peak_flops(p), hw.u_compute, "compute");
    return static_cast<double>(flops_per_token(m)) / denom;
}

double memory_latency(const ModelConfig& m, const HardwareConfig& hw, const PrecisionSpec& p) {
    hw.validate();
    double denom = checked_rate(hw.mem_bw, hw.u_memory, "memory");
    return memory_footprint(m, p).total().to_double() / denom;
}

double io_latency(const ModelConfig& m, const HardwareConfig& hw, const PrecisionSpec& p) {
    hw.validate();
    double denom = checked_rate(hw.storage_bw, hw.u_storage, "storage");
    return memory_footprint(m, p).weights.to_double() / denom;
}

double h2d_latency(const ModelConfig& m, const HardwareConfig& hw, const PrecisionSpec& p) {
    hw.validate();
    double denom = checked_rate(hw.h2d_bw, hw.u_h2d, "host-to-device");
    return memory_footprint(m, p).weights.to_double() / denom;
}

double net_latency(const ModelConfig& m, const HardwareConfig& hw, const PrecisionSpec& p) {
    m.validate();
    p.validate();
    hw.validate();
    double denom = checked_rate(hw.net_bw, hw.u_net, "network");
    Ratio shard_bytes = Ratio(detail::checked_mul(m.seq_len, m.hidden_dim)) * p.bytes_per_element();
    return shard_bytes.to_double() / denom;
}

OperatorBreakdown operator_breakdown(const ModelConfig& m, const HardwareConfig& hw,
                                     const PrecisionSpec& p) {
    m.validate();
    hw.validate();
    using detail::checked_mul;
    const std::int64_t h = m.hidden_dim;
    OperatorBreakdown b;
    b.attn_proj_flops = checked_mul(m.layers, checked_mul(6, checked_mul(h, h)));
    b.kv_matmul_flops = checked_mul(m.layers, checked_mul(4, checked_mul(h, m.seq_len)));
    b.mlp_flops = checked_mul(m.layers, checked_mul(8, checked_mul(h, m.intermediate_dim)));
    b.layernorm_softmax_flops = checked_mul(m.layers, checked_mul(9, h));
    double denom = checked_rate(hw.effective_peak_flops(p), hw.u_compute, "compute");
    b.attn_proj_s = static_cast<double>(b.attn_proj_flops) / denom;
    b.kv_matmul_s = static_cast<double>(b.kv_matmul_flops) / denom;
    b.mlp_s = static_cast<double>(b.mlp_flops) / denom;
    b.layernorm_softmax_s = static_cast<double>(b.layernorm_softmax_flops) / denom;
    return b;
}

LatencyBreakdown end_to_end(double t_comp, double t_mem, double t_io, double t_h2d,
                            double t_net, AggregationMode mode) {
    LatencyBreakdown b{t_comp, t_mem, t_io, t_h2d, t_net, 0, mode};
    for (double t : {t_comp, t_mem, t_io, t_h2d, t_net})
        if (t < 0 || !std::isfinite(t)) throw InternalError("negative or non-finite stage latency");
    if (mode == AggregationMode::serial)
        b.t_total = t_comp + t_mem + t_io + t_h2d + t_net;
    else
        b.t_total = std::max(t_comp, t_mem) + std::max(t_io, t_h2d) + t_net;
    return b;
}

LatencyBreakdown latency_breakdown(const ModelConfig& m, const HardwareConfig& hw,
                                   const PrecisionSpec& p, AggregationMode mode) {
    return end_to_end(compute_latency(m, hw, p), memory_latency(m, hw, p), io_latency(m, hw, p),
                      h2d_latency(m, hw, p), net_latency(m, hw, p), mode);
}

double amortized_per_token(const LatencyBreakdown& b, std::int64_t tokens) {
    if (tokens < 1) throw ConfigError("token budget must be >= 1");
    double one_time = b.t_io + b.t_h2d;
    if (b.mode == AggregationMode::overlapped) one_time = std::max(b.t_io, b.t_h2d);
    double recurring = b.mode == AggregationMode::serial ? b.t_comp + b.t_mem
                                                         : std::max(b.t_comp, b.t_mem);
    return recurring + b.t_net + one_time / static_cast<double>(tokens);
}

} // namespace edgeprofiler
