#pragma once

#include <cstdint>

#include "edgeprofiler/config.hpp"
#include "edgeprofiler/rational.hpp"

namespace edgeprofiler {

// Byte footprint of one inference session, split into its three addends.
struct MemoryFootprint {
    Ratio weights;     // all weight parameters
    Ratio activations; // hidden states for the full sequence
    Ratio kv_cache;    // cached key/value pairs across layers

    Ratio total() const { return weights + activations + kv_cache; }
};

// Total weight parameters: per-layer attention projections and feed-forward
// matrices plus input/output embeddings. Checked 64-bit arithmetic; overflow
// throws instead of wrapping.
std::int64_t param_count(const ModelConfig& m);

// FLOPs to produce one token: attention projections, key/value matmuls
// against the cached sequence, the two feed-forward matmuls, and the
// layernorm/softmax overhead, summed per layer.
std::int64_t flops_per_token(const ModelConfig& m);

// Bytes resident during inference (weights + activations + KV cache) at the
// given element width. Exact rational so sub-byte formats stay exact.
MemoryFootprint memory_footprint(const ModelConfig& m, const PrecisionSpec& p);

// FLOPs per byte of resident data; below ~1 the workload is bound by data
// movement rather than arithmetic. The exact form preserves identities such
// as AI(p1)/AI(p2) == bits2/bits1.
Ratio arithmetic_intensity_exact(const ModelConfig& m, const PrecisionSpec& p);
double arithmetic_intensity(const ModelConfig& m, const PrecisionSpec& p);

} // namespace edgeprofiler
