#include "edgeprofiler/quant.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace edgeprofiler::quant {

namespace {

constexpr std::int64_t kMaxBits = 30; // quantized values stored as int32

void check_bits(std::int64_t bits) {
    if (bits < 2 || bits > kMaxBits)
        throw ConfigError("bits must be in [2, " + std::to_string(kMaxBits) + "], got " +
                          std::to_string(bits));
}

void require_scheme(const QuantParams& params, Scheme expected) {
    if (params.scheme != expected)
        throw ConfigError("params use scheme " + to_string(params.scheme) + ", operation expects " +
                          to_string(expected));
}

void require_per_tensor(const QuantParams& params) {
    if (params.granularity != Granularity::per_tensor)
        throw ConfigError("per-tensor operation given per-channel params");
}

// round(x/s) (or round((x-z)/s)) half away from zero, clamped after rounding.
std::int32_t map_to_int(double x, double s, double z, std::int64_t qmin, std::int64_t qmax) {
    if (!std::isfinite(x)) throw ConfigError("cannot quantize a non-finite value");
    double scaled = std::round((x - z) / s); // std::round ties away from zero
    scaled = std::clamp(scaled, static_cast<double>(qmin), static_cast<double>(qmax));
    return static_cast<std::int32_t>(scaled);
}

struct Range {
    double min = 0;
    double max = 0;
    double max_abs = 0;
};

Range scan_range(const double* begin, const double* end) {
    Range r{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(), 0};
    for (const double* p = begin; p != end; ++p) {
        r.min = std::min(r.min, *p);
        r.max = std::max(r.max, *p);
        r.max_abs = std::max(r.max_abs, std::abs(*p));
    }
    return r;
}

// One (scale, zero_point) pair from a min-max range.
std::pair<double, double> calibrate_range(const Range& r, Scheme scheme, std::int64_t qmin,
                                          std::int64_t qmax) {
    if (scheme == Scheme::symmetric) {
        if (r.max_abs == 0) return {1.0, 0.0};
        return {r.max_abs / static_cast<double>(qmax), 0.0};
    }
    if (r.max == r.min) return {1.0, r.min};
    double s = (r.max - r.min) / static_cast<double>(qmax - qmin);
    double z = r.min - s * static_cast<double>(qmin);
    return {s, z};
}

} // namespace

Tensor Tensor::zeros(std::int64_t channels, std::int64_t elements_per_channel) {
    Tensor t{channels, elements_per_channel, {}};
    if (channels < 1 || elements_per_channel < 1)
        throw ConfigError("tensor shape must be positive");
    t.values.assign(static_cast<std::size_t>(channels * elements_per_channel), 0.0);
    return t;
}

void Tensor::validate() const {
    if (channels < 1 || elements_per_channel < 1)
        throw ConfigError("tensor shape must be positive");
    if (static_cast<std::int64_t>(values.size()) != size())
        throw ConfigError("tensor holds " + std::to_string(values.size()) + " values, shape wants " +
                          std::to_string(size()));
    for (double v : values)
        if (!std::isfinite(v)) throw ConfigError("tensor contains a non-finite value");
}

std::string to_string(Scheme s) {
    return s == Scheme::symmetric ? "symmetric" : "asymmetric";
}

std::string to_string(Granularity g) {
    return g == Granularity::per_tensor ? "per_tensor" : "per_channel";
}

Scheme scheme_from_string(const std::string& s) {
    if (s == "symmetric") return Scheme::symmetric;
    if (s == "asymmetric") return Scheme::asymmetric;
    throw ConfigError("unknown scheme '" + s + "' (expected symmetric or asymmetric)");
}

Granularity granularity_from_string(const std::string& s) {
    if (s == "per_tensor") return Granularity::per_tensor;
    if (s == "per_channel") return Granularity::per_channel;
    throw ConfigError("unknown granularity '" + s + "' (expected per_tensor or per_channel)");
}

std::int64_t QuantParams::qmin() const {
    return scheme == Scheme::symmetric ? -((std::int64_t{1} << (bits - 1)) - 1)
                                       : -(std::int64_t{1} << (bits - 1));
}

std::int64_t QuantParams::qmax() const {
    return (std::int64_t{1} << (bits - 1)) - 1;
}

void QuantParams::validate() const {
    check_bits(bits);
    if (scales.empty()) throw ConfigError("params carry no scales");
    for (double s : scales)
        if (!(s > 0) || !std::isfinite(s)) throw ConfigError("every scale must be positive");
    if (scheme == Scheme::symmetric) {
        if (!zero_points.empty()) throw ConfigError("symmetric params must not carry zero-points");
    } else {
        if (zero_points.size() != scales.size())
            throw ConfigError("asymmetric params need one zero-point per scale");
        for (double z : zero_points)
            if (!std::isfinite(z)) throw ConfigError("zero-points must be finite");
    }
    if (granularity == Granularity::per_tensor && scales.size() != 1)
        throw ConfigError("per-tensor params must carry exactly one scale");
}

QuantParams calibrate(const Tensor& t, Scheme scheme, Granularity granularity, std::int64_t bits) {
    t.validate();
    check_bits(bits);
    QuantParams params;
    params.scheme = scheme;
    params.granularity = granularity;
    params.bits = bits;
    const std::int64_t qmin = params.qmin();
    const std::int64_t qmax = params.qmax();

    auto push = [&](const Range& r) {
        auto [s, z] = calibrate_range(r, scheme, qmin, qmax);
        params.scales.push_back(s);
        if (scheme == Scheme::asymmetric) params.zero_points.push_back(z);
    };

    if (granularity == Granularity::per_tensor) {
        push(scan_range(t.values.data(), t.values.data() + t.values.size()));
    } else {
        for (std::int64_t c = 0; c < t.channels; ++c) {
            const double* row = t.values.data() + c * t.elements_per_channel;
            push(scan_range(row, row + t.elements_per_channel));
        }
    }
    return params;
}

std::int32_t quantize_symmetric(double x, const QuantParams& params) {
    params.validate();
    require_scheme(params, Scheme::symmetric);
    require_per_tensor(params);
    return map_to_int(x, params.scales[0], 0.0, params.qmin(), params.qmax());
}

std::vector<std::int32_t> quantize_symmetric(const Tensor& t, const QuantParams& params) {
    params.validate();
    require_scheme(params, Scheme::symmetric);
    require_per_tensor(params);
    t.validate();
    std::vector<std::int32_t> out;
    out.reserve(t.values.size());
    for (double v : t.values)
        out.push_back(map_to_int(v, params.scales[0], 0.0, params.qmin(), params.qmax()));
    return out;
}

double dequantize_symmetric(std::int32_t x_int, const QuantParams& params) {
    params.validate();
    require_scheme(params, Scheme::symmetric);
    require_per_tensor(params);
    return params.scales[0] * static_cast<double>(x_int);
}

std::int32_t quantize_asymmetric(double x, const QuantParams& params) {
    params.validate();
    require_scheme(params, Scheme::asymmetric);
    require_per_tensor(params);
    return map_to_int(x, params.scales[0], params.zero_points[0], params.qmin(), params.qmax());
}

std::vector<std::int32_t> quantize_asymmetric(const Tensor& t, const QuantParams& params) {
    params.validate();
    require_scheme(params, Scheme::asymmetric);
    require_per_tensor(params);
    t.validate();
    std::vector<std::int32_t> out;
    out.reserve(t.values.size());
    for (double v : t.values)
        out.push_back(map_to_int(v, params.scales[0], params.zero_points[0], params.qmin(),
                                 params.qmax()));
    return out;
}

double dequantize_asymmetric(std::int32_t x_int, const QuantParams& params) {
    params.validate();
    require_scheme(params, Scheme::asymmetric);
    require_per_tensor(params);
    return params.scales[0] * static_cast<double>(x_int) + params.zero_points[0];
}

std::vector<std::int32_t> quantize_per_channel(const Tensor& t, const QuantParams& params) {
    params.validate();
    t.validate();
    if (params.granularity != Granularity::per_channel)
        throw ConfigError("params are not per-channel");
    if (static_cast<std::int64_t>(params.scales.size()) != t.channels)
        throw ConfigError("params carry " + std::to_string(params.scales.size()) +
                          " scales for a tensor with " + std::to_string(t.channels) + " channels");
    std::vector<std::int32_t> out;
    out.reserve(t.values.size());
    const std::int64_t qmin = params.qmin();
    const std::int64_t qmax = params.qmax();
    for (std::int64_t c = 0; c < t.channels; ++c) {
        double s = params.scales[c];
        double z = params.scheme == Scheme::asymmetric ? params.zero_points[c] : 0.0;
        for (std::int64_t e = 0; e < t.elements_per_channel; ++e)
            out.push_back(map_to_int(t.at(c, e), s, z, qmin, qmax));
    }
    return out;
}

Tensor dequantize_per_channel(const std::vector<std::int32_t>& q, std::int64_t channels,
                              std::int64_t elements_per_channel, const QuantParams& params) {
    params.validate();
    if (params.granularity != Granularity::per_channel)
        throw ConfigError("params are not per-channel");
    if (static_cast<std::int64_t>(params.scales.size()) != channels)
        throw ConfigError("scale count does not match channel count");
    if (static_cast<std::int64_t>(q.size()) != channels * elements_per_channel)
        throw ConfigError("quantized buffer size does not match shape");
    Tensor t = Tensor::zeros(channels, elements_per_channel);
    for (std::int64_t c = 0; c < channels; ++c) {
        double s = params.scales[c];
        double z = params.scheme == Scheme::asymmetric ? params.zero_points[c] : 0.0;
        for (std::int64_t e = 0; e < elements_per_channel; ++e) {
            std::size_t i = static_cast<std::size_t>(c * elements_per_channel + e);
            t.values[i] = s * static_cast<double>(q[i]) + z;
        }
    }
    return t;
}

Tensor fake_quantize(const Tensor& t, const QuantParams& params) {
    params.validate();
    t.validate();
    if (params.granularity == Granularity::per_channel) {
        auto q = quantize_per_channel(t, params);
        return dequantize_per_channel(q, t.channels, t.elements_per_channel, params);
    }
    Tensor out = t;
    if (params.scheme == Scheme::symmetric) {
        auto q = quantize_symmetric(t, params);
        for (std::size_t i = 0; i < q.size(); ++i)
            out.values[i] = dequantize_symmetric(q[i], params);
    } else {
        auto q = quantize_asymmetric(t, params);
        for (std::size_t i = 0; i < q.size(); ++i)
            out.values[i] = dequantize_asymmetric(q[i], params);
    }
    return out;
}

ErrorStats quant_error_stats(const Tensor& original, const Tensor& reconstructed) {
    original.validate();
    reconstructed.validate();
    if (original.channels != reconstructed.channels ||
        original.elements_per_channel != reconstructed.elements_per_channel)
        throw ConfigError("tensor shapes do not match");
    ErrorStats stats;
    double sum_sq = 0;
    double sum_abs = 0;
    for (std::size_t i = 0; i < original.values.size(); ++i) {
        double d = original.values[i] - reconstructed.values[i];
        sum_sq += d * d;
        sum_abs += std::abs(d);
        stats.max_abs = std::max(stats.max_abs, std::abs(d));
    }
    auto n = static_cast<double>(original.values.size());
    stats.mse = sum_sq / n;
    stats.mean_abs = sum_abs / n;
    return stats;
}

Tensor read_tensor_text(std::istream& in) {
    Tensor t;
    std::string header;
    if (!std::getline(in, header)) throw ConfigError("tensor file is empty");
    std::istringstream hs(header);
    if (!(hs >> t.channels >> t.elements_per_channel))
        throw ConfigError("tensor header must be '<channels> <elements_per_channel>'");
    std::string extra;
    if (hs >> extra) throw ConfigError("tensor header has trailing content: " + extra);
    if (t.channels < 1 || t.elements_per_channel < 1)
        throw ConfigError("tensor shape must be positive");
    t.values.reserve(static_cast<std::size_t>(t.size()));
    std::string line;
    std::int64_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::size_t pos = 0;
        double v = 0;
        try {
            v = std::stod(line, &pos);
        } catch (const std::exception&) {
            throw ConfigError("line " + std::to_string(line_no) + ": not a number: " + line);
        }
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        if (pos != line.size())
            throw ConfigError("line " + std::to_string(line_no) + ": trailing content: " + line);
        t.values.push_back(v);
    }
    if (static_cast<std::int64_t>(t.values.size()) != t.size())
        throw ConfigError("tensor file has " + std::to_string(t.values.size()) +
                          " values, header wants " + std::to_string(t.size()));
    t.validate();
    return t;
}

Tensor read_tensor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open tensor file: " + path);
    return read_tensor_text(in);
}

void write_tensor_text(std::ostream& out, const Tensor& t) {
    t.validate();
    out << t.channels << " " << t.elements_per_channel << "\n";
    out.precision(17);
    for (double v : t.values) out << v << "\n";
}

} // namespace edgeprofiler::quant
