#include "edgeprofiler/analytic.hpp"

namespace edgeprofiler {

using detail::checked_add;
using detail::checked_mul;

std::int64_t param_count(const ModelConfig& m) {
    m.validate();
    // Four H x H attention projections per layer.
    std::int64_t attn = checked_mul(4, checked_mul(m.hidden_dim, m.hidden_dim));
    // Two feed-forward matrices per layer (H x I and I x H).
    std::int64_t ffn = checked_mul(2, checked_mul(m.hidden_dim, m.intermediate_dim));
    // Input and output embedding tables.
    std::int64_t embed = checked_mul(2, checked_mul(m.vocab_size, m.hidden_dim));
    return checked_add(checked_mul(m.layers, checked_add(attn, ffn)), embed);
}

std::int64_t flops_per_token(const ModelConfig& m) {
    m.validate();
    const std::int64_t h = m.hidden_dim;
    std::int64_t attn_proj = checked_mul(6, checked_mul(h, h));
    std::int64_t kv_matmul = checked_mul(4, checked_mul(h, m.seq_len));
    std::int64_t ffn_up = checked_mul(4, checked_mul(h, m.intermediate_dim));
    std::int64_t ffn_down = checked_mul(4, checked_mul(m.intermediate_dim, h));
    std::int64_t norm_softmax = checked_mul(9, h);
    std::int64_t per_layer = checked_add(
        checked_add(attn_proj, kv_matmul),
        checked_add(checked_add(ffn_up, ffn_down), norm_softmax));
    return checked_mul(m.layers, per_layer);
}

MemoryFootprint memory_footprint(const ModelConfig& m, const PrecisionSpec& p) {
    m.validate();
    p.validate();
    const Ratio bytes = p.bytes_per_element();
    std::int64_t seq_hidden = checked_mul(m.seq_len, m.hidden_dim);
    std::int64_t kv_elems = checked_mul(2, checked_mul(m.layers, seq_hidden));
    return MemoryFootprint{
        .weights = Ratio(param_count(m)) * bytes,
        .activations = Ratio(seq_hidden) * bytes,
        .kv_cache = Ratio(kv_elems) * bytes,
    };
}

Ratio arithmetic_intensity_exact(const ModelConfig& m, const PrecisionSpec& p) {
    // Footprint is strictly positive by the config invariants.
    Ratio flops(flops_per_token(m));
    return flops / memory_footprint(m, p).total();
}

double arithmetic_intensity(const ModelConfig& m, const PrecisionSpec& p) {
    return arithmetic_intensity_exact(m, p).to_double();
}

} // namespace edgeprofiler
