#pragma once

#include <cstdint>
#include <string>

#include "edgeprofiler/analytic.hpp"
#include "edgeprofiler/config.hpp"

namespace edgeprofiler {

enum class AggregationMode { serial, overlapped };

std::string to_string(AggregationMode mode);
AggregationMode aggregation_mode_from_string(const std::string& s);

// Five-stage latency estimate, all in seconds. Compute, memory and network
// recur per token; storage I/O and host-to-device are one-time weight-load
// costs, but the headline total sums all five stages.
struct LatencyBreakdown {
    double t_comp = 0;
    double t_mem = 0;
    double t_io = 0;
    double t_h2d = 0;
    double t_net = 0;
    double t_total = 0;
    AggregationMode mode = AggregationMode::serial;
};

// Compute time split over the per-layer operators. FLOP counts partition
// flops_per_token exactly; seconds share the compute denominator.
struct OperatorBreakdown {
    std::int64_t attn_proj_flops = 0;
    std::int64_t kv_matmul_flops = 0;
    std::int64_t mlp_flops = 0;
    std::int64_t layernorm_softmax_flops = 0;
    double attn_proj_s = 0;
    double kv_matmul_s = 0;
    double mlp_s = 0;
    double layernorm_softmax_s = 0;

    std::int64_t total_flops() const {
        return attn_proj_flops + kv_matmul_flops + mlp_flops + layernorm_softmax_flops;
    }
    double total_seconds() const {
        return attn_proj_s + kv_matmul_s + mlp_s + layernorm_softmax_s;
    }
};

// Arithmetic at the device's effective throughput.
double compute_latency(const ModelConfig& m, const HardwareConfig& hw, const PrecisionSpec& p);

// Moving weights, activations and cache through DRAM.
double memory_latency(const ModelConfig& m, const HardwareConfig& hw, const PrecisionSpec& p);

// One-time weight load from storage (weight bytes only, not the full footprint).
double io_latency(const ModelConfig& m, const HardwareConfig& hw, const PrecisionSpec& p);

// One-time weight copy over the host-to-device interconnect.
double h2d_latency(const ModelConfig& m, const HardwareConfig& hw, const PrecisionSpec& p);

// One KV shard (seq_len x hidden_dim elements) exchanged over the network.
double net_latency(const ModelConfig& m, const HardwareConfig& hw, const PrecisionSpec& p);

OperatorBreakdown operator_breakdown(const ModelConfig& m, const HardwareConfig& hw,
                                     const PrecisionSpec& p);

// Fills t_total from the five stages. Serial sums everything; overlapped
// takes max(compute, memory) + max(storage, h2d) + network.
LatencyBreakdown end_to_end(double t_comp, double t_mem, double t_io, double t_h2d,
                            double t_net, AggregationMode mode = AggregationMode::serial);

// All five stages plus the aggregate for one (model, hardware, precision).
LatencyBreakdown latency_breakdown(const ModelConfig& m, const HardwareConfig& hw,
                                   const PrecisionSpec& p,
                                   AggregationMode mode = AggregationMode::serial);

// Derived view: one-time weight-load stages spread over a token budget.
double amortized_per_token(const LatencyBreakdown& b, std::int64_t tokens);

} // namespace edgeprofiler
