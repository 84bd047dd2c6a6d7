#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "edgeprofiler/errors.hpp"
#include "edgeprofiler/rational.hpp"

namespace edgeprofiler {

// Transformer architecture parameters. Counting formulas consume layers,
// hidden_dim, intermediate_dim, vocab_size and seq_len; attention_heads only
// constrains hidden_dim (must divide it evenly).
struct ModelConfig {
    std::string name = "unnamed";
    std::int64_t layers = 0;
    std::int64_t hidden_dim = 0;
    std::int64_t intermediate_dim = 0;
    std::int64_t attention_heads = 0;
    std::int64_t vocab_size = 0;
    std::int64_t seq_len = 2048; // tokens

    // Catalog metadata; does not affect any computation.
    std::string provenance = "assumed"; // "paper" or "assumed"
    std::string notes;

    void validate() const;
};

// Numeric format. bytes_per_element() is exact: INT4 yields 1/2, never 0.
struct PrecisionSpec {
    std::string name = "custom";
    std::int64_t bits_per_element = 0;

    std::string provenance = "assumed";
    std::string notes;

    Ratio bytes_per_element() const { return Ratio(bits_per_element, 8); }

    void validate() const;
};

// Device capability description: peak throughput, the four transfer/memory
// bandwidths, one utilization factor per resource, and two energy
// coefficients. Optional per-precision peak_flops overrides model devices
// whose low-bit ALUs run faster than their FP32 path.
struct HardwareConfig {
    std::string name = "unnamed";
    double peak_flops = 0;  // FLOPs/second
    double mem_bw = 0;      // bytes/second, DRAM
    double storage_bw = 0;  // bytes/second, disk or flash
    double h2d_bw = 0;      // bytes/second, host-to-device interconnect
    double net_bw = 0;      // bytes/second, network
    double u_compute = 1.0;
    double u_memory = 1.0;
    double u_storage = 1.0;
    double u_h2d = 1.0;
    double u_net = 1.0;
    double e_flop = 0; // joules per FLOP
    double e_byte = 0; // joules per byte moved
    std::map<std::string, double> peak_flops_per_precision;

    std::string provenance = "assumed";
    std::string notes;

    // Per-precision override when configured, shared peak otherwise.
    double effective_peak_flops(const PrecisionSpec& p) const;

    void validate() const;
};

} // namespace edgeprofiler
