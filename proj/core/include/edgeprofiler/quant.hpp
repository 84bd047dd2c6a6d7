#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "edgeprofiler/errors.hpp"

namespace edgeprofiler::quant {

// Row-major 2-D value carrier. Channels are rows; per-channel quantization
// assigns one scale (and zero-point) per row.
struct Tensor {
    std::int64_t channels = 0;
    std::int64_t elements_per_channel = 0;
    std::vector<double> values;

    static Tensor zeros(std::int64_t channels, std::int64_t elements_per_channel);

    std::int64_t size() const { return channels * elements_per_channel; }
    double at(std::int64_t channel, std::int64_t element) const {
        return values[channel * elements_per_channel + element];
    }

    // Shape consistency and finiteness of every value.
    void validate() const;
};

enum class Scheme { symmetric, asymmetric };
enum class Granularity { per_tensor, per_channel };

std::string to_string(Scheme s);
std::string to_string(Granularity g);
Scheme scheme_from_string(const std::string& s);
Granularity granularity_from_string(const std::string& s);

// Quantization parameters. Scales are one entry for per-tensor, one per
// channel for per-channel. Symmetric mappings carry no zero-points.
struct QuantParams {
    Scheme scheme = Scheme::symmetric;
    Granularity granularity = Granularity::per_tensor;
    std::int64_t bits = 8;
    std::vector<double> scales;
    std::vector<double> zero_points;

    // Integer range of the mapping. Symmetric restricts to +/-(2^(bits-1)-1)
    // so real zero maps to integer zero with a symmetric span; asymmetric
    // uses the full two's-complement range.
    std::int64_t qmin() const;
    std::int64_t qmax() const;

    void validate() const;
};

// Min-max calibration. Symmetric: s = max|x| / qmax. Asymmetric:
// s = (max - min) / (qmax - qmin), z = min - s*qmin. A degenerate range
// (all-zero, or all-constant for asymmetric) falls back to s = 1 so the
// round trip maps every value onto itself.
QuantParams calibrate(const Tensor& t, Scheme scheme, Granularity granularity, std::int64_t bits);

// Per-tensor mappings, scalar and whole-tensor forms. Rounding is
// round-half-away-from-zero; results clamp to [qmin, qmax] after rounding.
std::int32_t quantize_symmetric(double x, const QuantParams& params);
std::vector<std::int32_t> quantize_symmetric(const Tensor& t, const QuantParams& params);
double dequantize_symmetric(std::int32_t x_int, const QuantParams& params);

std::int32_t quantize_asymmetric(double x, const QuantParams& params);
std::vector<std::int32_t> quantize_asymmetric(const Tensor& t, const QuantParams& params);
double dequantize_asymmetric(std::int32_t x_int, const QuantParams& params);

// Per-channel mapping for either scheme (zero-point is identically 0 when
// symmetric). Scale count must match the tensor's channel count.
std::vector<std::int32_t> quantize_per_channel(const Tensor& t, const QuantParams& params);
Tensor dequantize_per_channel(const std::vector<std::int32_t>& q, std::int64_t channels,
                              std::int64_t elements_per_channel, const QuantParams& params);

// Quantize-then-dequantize: what downstream computation sees when
// quantization error is simulated while values stay in real form.
Tensor fake_quantize(const Tensor& t, const QuantParams& params);

struct ErrorStats {
    double mse = 0;
    double max_abs = 0;
    double mean_abs = 0;
};

ErrorStats quant_error_stats(const Tensor& original, const Tensor& reconstructed);

// Flat text exchange format: "<channels> <elements_per_channel>" header line,
// then one value per line in row-major order.
Tensor read_tensor_text(std::istream& in);
Tensor read_tensor_file(const std::string& path);
void write_tensor_text(std::ostream& out, const Tensor& t);

} // namespace edgeprofiler::quant
