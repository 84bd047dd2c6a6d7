#include "edgeprofiler/presets.hpp"

#include <algorithm>
#include <sstream>

namespace edgeprofiler {

namespace {

// Bandwidths, utilization factors and energy coefficients are device-class
// estimates, not measurements; every device entry is provenance-flagged
// "assumed" and meant to be copied and recalibrated per deployment.
constexpr const char* kCalibrationNote =
    "Peak throughput, bandwidths, utilization factors and energy coefficients are assumed "
    "device-class estimates (calibration required); only the device identity is vendor-published.";

PresetCatalog build_catalog() {
    PresetCatalog c;

    {
        HardwareConfig hw;
        hw.name = "raspberry-pi-4";
        hw.peak_flops = 4.8e10;  // 4 cores x 1.5 GHz x 8 FP32 FLOPs/cycle (NEON FMA)
        hw.mem_bw = 4.0e9;       // LPDDR4, sustained
        hw.storage_bw = 9.0e7;   // UHS-I microSD sequential read
        hw.h2d_bw = 3.0e9;       // unified-memory copy path
        hw.net_bw = 1.25e8;      // gigabit Ethernet
        hw.u_compute = 0.3;
        hw.u_memory = 0.7;
        hw.u_storage = 0.5;
        hw.u_h2d = 0.8;
        hw.u_net = 0.7;
        hw.e_flop = 5e-11;
        hw.e_byte = 6e-11;
        hw.provenance = "assumed";
        hw.notes = std::string("Quad-core Cortex-A72 @1.5 GHz, LPDDR4, microSD storage. ") +
                   kCalibrationNote;
        c.devices.push_back(hw);
    }
    {
        HardwareConfig hw;
        hw.name = "raspberry-pi-5";
        hw.peak_flops = 7.68e10; // 4 cores x 2.4 GHz x 8 FP32 FLOPs/cycle
        hw.mem_bw = 8.5e9;       // LPDDR4X, sustained
        hw.storage_bw = 4.0e8;   // PCIe 2.0 x1 NVMe class
        hw.h2d_bw = 4.0e9;
        hw.net_bw = 1.25e8;
        hw.u_compute = 0.3;
        hw.u_memory = 0.7;
        hw.u_storage = 0.6;
        hw.u_h2d = 0.8;
        hw.u_net = 0.7;
        hw.e_flop = 4e-11;
        hw.e_byte = 5e-11;
        hw.provenance = "assumed";
        hw.notes = std::string("Quad-core Cortex-A76 @2.4 GHz, LPDDR4X, microSD/PCIe storage. ") +
                   kCalibrationNote;
        c.devices.push_back(hw);
    }
    {
        HardwareConfig hw;
        hw.name = "jetson-orin-nano-super";
        hw.peak_flops = 2.0e12;  // Ampere GPU, dense FP32-equivalent
        hw.mem_bw = 1.02e11;     // 128-bit LPDDR5-6400
        hw.storage_bw = 1.5e9;   // NVMe over PCIe 3.0
        hw.h2d_bw = 8.0e9;
        hw.net_bw = 1.25e8;
        hw.u_compute = 0.3;
        hw.u_memory = 0.7;
        hw.u_storage = 0.8;
        hw.u_h2d = 0.8;
        hw.u_net = 0.7;
        hw.e_flop = 3e-11;
        hw.e_byte = 4e-11;
        hw.provenance = "assumed";
        hw.notes = std::string("6-core Cortex-A78AE @1.7 GHz, 8 GB 128-bit LPDDR5, ") +
                   "microSD/NVMe storage. " + kCalibrationNote;
        c.devices.push_back(hw);
    }

    {
        ModelConfig m;
        m.name = "tinyllama-1.1b";
        m.layers = 22;
        m.hidden_dim = 2048;
        m.intermediate_dim = 5632;
        m.attention_heads = 32;
        m.vocab_size = 32000;
        m.seq_len = 2048;
        m.provenance = "assumed";
        m.notes = "Public TinyLlama-1.1B architecture hyperparameters; counted parameters land "
                  "about 8% under the 1.1B nominal size.";
        c.models.push_back(m);
    }
    {
        ModelConfig m;
        m.name = "gemma3-1b";
        m.layers = 26;
        m.hidden_dim = 1152;
        m.intermediate_dim = 10368;
        m.attention_heads = 4;
        m.vocab_size = 131072;
        m.seq_len = 2048;
        m.provenance = "assumed";
        m.notes = "Gemma-3-1B folded to the two-matmul, untied-embedding form this model counts: "
                  "intermediate_dim 10368 = 3/2 x 6912 absorbs the gated MLP's third matrix, "
                  "vocab_size 131072 = 262144/2 counts the tied embedding table once. Counted "
                  "parameters land about 6% over the 1.0B nominal size.";
        c.models.push_back(m);
    }
    {
        ModelConfig m;
        m.name = "llama3.2-1b";
        m.layers = 16;
        m.hidden_dim = 2048;
        m.intermediate_dim = 8192;
        m.attention_heads = 32;
        m.vocab_size = 128256;
        m.seq_len = 2048;
        m.provenance = "assumed";
        m.notes = "Public Llama-3.2-1B architecture hyperparameters; untied-embedding counting "
                  "lands about 8% over the 1.24B checkpoint size.";
        c.models.push_back(m);
    }
    {
        ModelConfig m;
        m.name = "deepseek-r1-1.5b";
        m.layers = 28;
        m.hidden_dim = 1536;
        m.intermediate_dim = 8960;
        m.attention_heads = 12;
        m.vocab_size = 151936;
        m.seq_len = 2048;
        m.provenance = "assumed";
        m.notes = "DeepSeek-R1-Distill-Qwen-1.5B (Qwen2.5-1.5B architecture) hyperparameters; "
                  "counted parameters land within 1% of the 1.5B nominal size.";
        c.models.push_back(m);
    }

    for (auto [name, bits] : {std::pair<const char*, std::int64_t>{"FP32", 32},
                              {"FP16", 16},
                              {"INT8", 8},
                              {"INT4", 4}}) {
        PrecisionSpec p;
        p.name = name;
        p.bits_per_element = bits;
        p.provenance = "paper";
        p.notes = "";
        c.precisions.push_back(p);
    }

    auto by_name = [](const auto& a, const auto& b) { return a.name < b.name; };
    std::sort(c.devices.begin(), c.devices.end(), by_name);
    std::sort(c.models.begin(), c.models.end(), by_name);
    std::sort(c.precisions.begin(), c.precisions.end(), by_name);

    for (const auto& d : c.devices) d.validate();
    for (const auto& m : c.models) m.validate();
    for (const auto& p : c.precisions) p.validate();
    return c;
}

template <typename T>
const T& find_or_throw(const std::vector<T>& entries, const std::string& name, const char* kind) {
    for (const auto& e : entries)
        if (e.name == name) return e;
    std::ostringstream msg;
    msg << "unknown " << kind << " preset '" << name << "' (available:";
    for (const auto& e : entries) msg << " " << e.name;
    msg << ")";
    throw UnknownPresetError(msg.str());
}

} // namespace

const PresetCatalog& preset_catalog() {
    static const PresetCatalog catalog = build_catalog();
    return catalog;
}

HardwareConfig load_device_preset(const std::string& name) {
    return find_or_throw(preset_catalog().devices, name, "device");
}

ModelConfig load_model_preset(const std::string& name) {
    return find_or_throw(preset_catalog().models, name, "model");
}

PrecisionSpec load_precision_preset(const std::string& name) {
    return find_or_throw(preset_catalog().precisions, name, "precision");
}

std::string format_preset_listing(const PresetCatalog& catalog) {
    std::ostringstream out;
    out << "devices:\n";
    for (const auto& d : catalog.devices)
        out << "  " << d.name << " [" << d.provenance << "]\n";
    out << "models:\n";
    for (const auto& m : catalog.models)
        out << "  " << m.name << " [" << m.provenance << "]"
            << " L=" << m.layers << " H=" << m.hidden_dim << " I=" << m.intermediate_dim
            << " V=" << m.vocab_size << " S=" << m.seq_len << "\n";
    out << "precisions:\n";
    for (const auto& p : catalog.precisions)
        out << "  " << p.name << " [" << p.provenance << "] bits=" << p.bits_per_element << "\n";
    return out.str();
}

} // namespace edgeprofiler
