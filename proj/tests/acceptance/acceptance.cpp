// Acceptance gate: every release-blocking behavior checked end to end, one
// printed line per criterion. Exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "edgeprofiler/analytic.hpp"
#include "edgeprofiler/energy.hpp"
#include "edgeprofiler/latency.hpp"
#include "edgeprofiler/presets.hpp"
#include "edgeprofiler/quant.hpp"
#include "edgeprofiler/report.hpp"
#include "support/oracle.hpp"
#include "support/random_configs.hpp"

using namespace edgeprofiler;

namespace {

struct Criterion {
    int id;
    std::string summary;
    std::function<bool(std::string&)> run;
};

bool near(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

const std::vector<std::string> kDeviceNames = {"jetson-orin-nano-super", "raspberry-pi-4",
                                               "raspberry-pi-5"};
const std::vector<std::string> kModelNames = {"deepseek-r1-1.5b", "gemma3-1b", "llama3.2-1b",
                                              "tinyllama-1.1b"};
const std::vector<std::string> kPrecisionNames = {"FP32", "FP16", "INT8", "INT4"};

// --- criterion 1: counting formulas vs the independent oracle ---------------

bool check_oracle_equivalence(std::string& detail) {
    auto started = std::chrono::steady_clock::now();
    std::mt19937 rng(202406);
    int configs = 0;
    for (int i = 0; i < 150; ++i) {
        auto m = testsupport::random_model(rng);
        oracle::Model om{m.layers, m.hidden_dim, m.intermediate_dim, m.vocab_size, m.seq_len};
        if (static_cast<oracle::int128>(param_count(m)) != oracle::param_count(om)) return false;
        if (static_cast<oracle::int128>(flops_per_token(m)) != oracle::flops_per_token(om))
            return false;
        for (std::int64_t bits : {4, 8, 16, 32}) {
            PrecisionSpec p;
            p.bits_per_element = bits;
            Ratio as_bits = memory_footprint(m, p).total() * Ratio(8);
            if (!as_bits.is_integer()) return false;
            if (static_cast<oracle::int128>(as_bits.num()) != oracle::memory_bits(om, bits))
                return false;
        }
        ++configs;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - started)
                  .count();
    std::ostringstream d;
    d << configs << " random configs, " << ms << " ms";
    detail = d.str();
    return configs >= 100 && ms < 1000;
}

// --- criterion 2: tinyllama anchors -----------------------------------------

bool check_tinyllama_anchors(std::string& detail) {
    auto m = load_model_preset("tinyllama-1.1b");
    if (m.seq_len != 2048) return false;
    if (param_count(m) != 1'007'681'536) return false;
    if (flops_per_token(m) != 2'953'195'520) return false;
    auto weights = memory_footprint(m, load_precision_preset("FP16")).weights;
    if (weights != Ratio(2'015'363'072)) return false;
    double gap = std::abs(weights.to_double() - 2.2e9) / 2.2e9;
    std::ostringstream d;
    d << "P=1007681536, FLOPs=2953195520, FP16 weights 2015363072 B (" << std::round(gap * 1000) / 10
      << "% from 2.2 GB)";
    detail = d.str();
    return gap < 0.10;
}

// --- criterion 3: byte-linear stages scale exactly with precision -----------

bool check_precision_scaling(std::string& detail) {
    int pairs = 0;
    for (const auto& device : kDeviceNames) {
        auto hw = load_device_preset(device);
        if (!hw.peak_flops_per_precision.empty()) return false; // shared peak expected
        for (const auto& model : kModelNames) {
            auto m = load_model_preset(model);
            auto fp32 = load_precision_preset("FP32");
            auto int8 = load_precision_preset("INT8");
            auto int4 = load_precision_preset("INT4");
            using StageFn = double (*)(const ModelConfig&, const HardwareConfig&,
                                       const PrecisionSpec&);
            for (StageFn stage : {static_cast<StageFn>(memory_latency),
                                  static_cast<StageFn>(io_latency),
                                  static_cast<StageFn>(h2d_latency),
                                  static_cast<StageFn>(net_latency)}) {
                double t32 = stage(m, hw, fp32);
                double t8 = stage(m, hw, int8);
                double t4 = stage(m, hw, int4);
                if (!near(t8, 0.25 * t32, 1e-12)) return false;
                if (!near(t4, 0.125 * t32, 1e-12)) return false;
            }
            ++pairs;
        }
    }
    detail = std::to_string(pairs) + " device/model pairs, 4 stages each";
    return true;
}

// --- criterion 4: end-to-end INT8/FP32 ratio on pi-4 ------------------------

bool check_end_to_end_ratio(std::string& detail) {
    auto pi4 = load_device_preset("raspberry-pi-4");
    auto tiny = load_model_preset("tinyllama-1.1b");
    double t32 = run_profile(tiny, pi4, load_precision_preset("FP32")).latency.t_total;
    double t8 = run_profile(tiny, pi4, load_precision_preset("INT8")).latency.t_total;
    double ratio = t8 / t32;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "serial t_total ratio = %.4f (band [0.25, 0.30])", ratio);
    detail = buf;
    return ratio >= 0.25 && ratio <= 0.30;
}

// --- criterion 5: storage I/O dominance and jetson advantage ----------------

bool check_io_dominance(std::string& detail) {
    for (const auto& device : {"raspberry-pi-4", "raspberry-pi-5"}) {
        auto hw = load_device_preset(device);
        for (const auto& model : kModelNames) {
            auto m = load_model_preset(model);
            for (const auto& precision : kPrecisionNames) {
                auto lat = latency_breakdown(m, hw, load_precision_preset(precision));
                double others = std::max({lat.t_comp, lat.t_mem, lat.t_h2d, lat.t_net});
                if (!(lat.t_io > others)) return false;
            }
        }
    }
    auto jetson = load_device_preset("jetson-orin-nano-super");
    auto pi5 = load_device_preset("raspberry-pi-5");
    auto int8 = load_precision_preset("INT8");
    double min_speedup = 1e300;
    for (const auto& model : kModelNames) {
        auto m = load_model_preset(model);
        double t_jetson = latency_breakdown(m, jetson, int8).t_total;
        double t_pi5 = latency_breakdown(m, pi5, int8).t_total;
        min_speedup = std::min(min_speedup, t_pi5 / t_jetson);
    }
    char buf[112];
    std::snprintf(buf, sizeof(buf),
                  "t_io strict argmax on both Pis (32 combos); jetson INT8 >= %.2fx faster than pi-5",
                  min_speedup);
    detail = buf;
    return min_speedup >= 3.0;
}

// --- criterion 6: data-movement-bound regime at FP32 ------------------------

bool check_intensity_regime(std::string& detail) {
    auto fp32 = load_precision_preset("FP32");
    auto fp16 = load_precision_preset("FP16");
    std::ostringstream d;
    d.precision(4);
    d << "FP32 AI:";
    bool ok = true;
    for (const auto& model : kModelNames) {
        auto m = load_model_preset(model);
        double ai32 = arithmetic_intensity(m, fp32);
        double ai16 = arithmetic_intensity(m, fp16);
        d << " " << model << "=" << ai32 << " (FP16 " << ai16 << ")";
        // intensity is device-independent; run the full grid anyway so the
        // gate covers every shipped combination literally
        for (const auto& device : kDeviceNames) {
            (void)load_device_preset(device);
            if (!(ai32 < 1.0)) ok = false;
        }
    }
    detail = d.str();
    return ok;
}

// --- criterion 7: energy ratio limits ----------------------------------------

bool check_energy_limits(std::string& detail) {
    auto int8 = load_precision_preset("INT8");
    auto fp32 = load_precision_preset("FP32");
    for (const auto& model : kModelNames) {
        auto m = load_model_preset(model);
        HardwareConfig byte_only = load_device_preset("raspberry-pi-4");
        byte_only.e_flop = 0;
        double limit_ratio = energy_per_token(m, byte_only, int8).e_total /
                             energy_per_token(m, byte_only, fp32).e_total;
        if (limit_ratio != 0.25) return false;
        for (const auto& device : kDeviceNames) {
            auto hw = load_device_preset(device);
            double ratio =
                energy_per_token(m, hw, int8).e_total / energy_per_token(m, hw, fp32).e_total;
            if (!(ratio > 0.25 && ratio < 1.0)) return false;
        }
    }
    detail = "e_flop=0 ratio exactly 0.25; preset coefficients strictly inside (0.25, 1)";
    return true;
}

// --- criterion 8: quantization property suite --------------------------------

bool check_quant_properties(std::string& detail) {
    using namespace edgeprofiler::quant;
    auto started = std::chrono::steady_clock::now();
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> val(-40.0, 40.0);

    // (a) symmetric zero maps to zero for any calibrated scale
    for (int i = 0; i < 50; ++i) {
        auto t = Tensor::zeros(1, 8);
        for (auto& v : t.values) v = val(rng);
        auto params = calibrate(t, Scheme::symmetric, Granularity::per_tensor, 8);
        if (quantize_symmetric(0.0, params) != 0) return false;
        if (dequantize_symmetric(0, params) != 0.0) return false;
    }

    // (b) round-trip error <= s/2 on >= 10,000 in-range samples
    int samples = 0;
    for (int round = 0; round < 30; ++round) {
        auto t = Tensor::zeros(4, 100);
        for (auto& v : t.values) v = val(rng);
        for (auto scheme : {Scheme::symmetric, Scheme::asymmetric}) {
            auto params = calibrate(t, scheme, Granularity::per_tensor, 8);
            auto back = fake_quantize(t, params);
            double bound = params.scales[0] / 2 * (1 + 1e-9);
            for (std::size_t i = 0; i < t.values.size(); ++i) {
                if (std::abs(back.values[i] - t.values[i]) > bound) return false;
                ++samples;
            }
        }
    }
    if (samples < 10'000) return false;

    // (c) per-channel reconstruction never exceeds the per-tensor bound
    for (int round = 0; round < 25; ++round) {
        auto t = Tensor::zeros(6, 32);
        for (std::int64_t c = 0; c < t.channels; ++c) {
            double spread = std::pow(4.0, static_cast<double>(c % 4));
            for (std::int64_t e = 0; e < t.elements_per_channel; ++e)
                t.values[c * t.elements_per_channel + e] = val(rng) / 40.0 * spread;
        }
        auto global = calibrate(t, Scheme::symmetric, Granularity::per_tensor, 8);
        auto per_channel = calibrate(t, Scheme::symmetric, Granularity::per_channel, 8);
        auto back = fake_quantize(t, per_channel);
        double bound = global.scales[0] / 2 * (1 + 1e-9);
        for (std::size_t i = 0; i < t.values.size(); ++i)
            if (std::abs(back.values[i] - t.values[i]) > bound) return false;
    }

    // (d) fake quantization is idempotent
    for (int round = 0; round < 25; ++round) {
        auto t = Tensor::zeros(3, 16);
        for (auto& v : t.values) v = val(rng);
        for (auto scheme : {Scheme::symmetric, Scheme::asymmetric}) {
            for (auto gran : {Granularity::per_tensor, Granularity::per_channel}) {
                auto params = calibrate(t, scheme, gran, 5);
                auto once = fake_quantize(t, params);
                auto twice = fake_quantize(once, params);
                if (twice.values != once.values) return false;
            }
        }
    }

    // (e) exhaustive nearest-level agreement on small low-bit tensors
    for (int round = 0; round < 150; ++round) {
        auto t = Tensor::zeros(2, 8);
        for (auto& v : t.values) v = val(rng) / 5.0;
        for (std::int64_t bits : {2, 3, 4}) {
            for (auto scheme : {Scheme::symmetric, Scheme::asymmetric}) {
                auto params = calibrate(t, scheme, Granularity::per_tensor, bits);
                double s = params.scales[0];
                double z = scheme == Scheme::asymmetric ? params.zero_points[0] : 0.0;
                auto q = scheme == Scheme::symmetric ? quantize_symmetric(t, params)
                                                     : quantize_asymmetric(t, params);
                for (std::size_t i = 0; i < t.values.size(); ++i) {
                    std::int32_t best = 0;
                    double best_dist = 1e300;
                    for (std::int64_t k = params.qmin(); k <= params.qmax(); ++k) {
                        double dist = std::abs(t.values[i] - (s * static_cast<double>(k) + z));
                        if (dist < best_dist ||
                            (dist == best_dist && std::llabs(k) > std::llabs(best))) {
                            best_dist = dist;
                            best = static_cast<std::int32_t>(k);
                        }
                    }
                    if (q[i] != best) return false;
                }
            }
        }
    }

    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - started)
                  .count();
    std::ostringstream d;
    d << samples << " round-trip samples plus grid/idempotence/bound checks, " << ms << " ms";
    detail = d.str();
    return ms < 5000;
}

// --- criterion 9: operator breakdown identities -------------------------------

bool check_operator_identity(std::string& detail) {
    for (const auto& device : kDeviceNames) {
        auto hw = load_device_preset(device);
        for (const auto& model : kModelNames) {
            auto m = load_model_preset(model);
            for (const auto& precision : kPrecisionNames) {
                auto p = load_precision_preset(precision);
                auto ops = operator_breakdown(m, hw, p);
                if (ops.total_flops() != flops_per_token(m)) return false;
                double t_comp = compute_latency(m, hw, p);
                if (std::abs(ops.total_seconds() - t_comp) > 1e-9 * t_comp) return false;
            }
        }
    }
    detail = "FLOP partition exact and operator seconds sum to t_comp (48 combos)";
    return true;
}

// --- criterion 10: determinism and round-trips --------------------------------

bool check_determinism(std::string& detail) {
    auto m = load_model_preset("llama3.2-1b");
    auto hw = load_device_preset("jetson-orin-nano-super");
    auto p = load_precision_preset("FP16");
    auto first = render(run_profile(m, hw, p), OutputFormat::json);
    auto second = render(run_profile(m, hw, p), OutputFormat::json);
    if (first != second) return false;

    auto reparsed = report_from_json(first);
    if (render(reparsed, OutputFormat::json) != first) return false;
    auto recomputed =
        run_profile(reparsed.model, reparsed.hardware, reparsed.precision, reparsed.mode);
    if (render(recomputed, OutputFormat::json) != first) return false;

    auto serial = run_sweep(kDeviceNames, kModelNames, kPrecisionNames,
                            AggregationMode::serial, 1);
    auto threaded = run_sweep(kDeviceNames, kModelNames, kPrecisionNames,
                              AggregationMode::serial, 8);
    if (render(serial, OutputFormat::json) != render(threaded, OutputFormat::json)) return false;

    detail = "byte-identical reports, parse/render fixpoint, sweep invariant to --jobs";
    return true;
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "counting formulas match the independent oracle exactly", check_oracle_equivalence},
        {2, "tinyllama-1.1b anchors: params, FLOPs and FP16 weight bytes", check_tinyllama_anchors},
        {3, "INT8/INT4 scale byte-bound stages by exactly 1/4 and 1/8", check_precision_scaling},
        {4, "pi-4 tinyllama serial INT8/FP32 total ratio within [0.25, 0.30]",
         check_end_to_end_ratio},
        {5, "storage I/O dominates on both Pis; jetson at least 3x faster at INT8",
         check_io_dominance},
        {6, "arithmetic intensity below 1 FLOP/byte at FP32 for every model",
         check_intensity_regime},
        {7, "energy ratio hits 0.25 with e_flop=0 and stays inside (0.25, 1)",
         check_energy_limits},
        {8, "quantization properties: zero map, error bounds, idempotence, nearest level",
         check_quant_properties},
        {9, "operator FLOPs partition exactly; operator times sum to t_comp",
         check_operator_identity},
        {10, "byte-identical determinism and canonical round-trips", check_determinism},
    };

    int failures = 0;
    for (auto& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::printf("%s  %2d  %s%s%s\n", ok ? "PASS" : "FAIL", c.id, c.summary.c_str(),
                    detail.empty() ? "" : " -- ", detail.c_str());
    }
    if (failures > 0) std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
