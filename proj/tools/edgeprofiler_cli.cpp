// Command-line front end: profile single configurations, sweep the preset
// grid, list presets, and run the quantization demo on a tensor file.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "edgeprofiler/config_io.hpp"
#include "edgeprofiler/presets.hpp"
#include "edgeprofiler/quant.hpp"
#include "edgeprofiler/report.hpp"

namespace {

using namespace edgeprofiler;

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 2;
constexpr int kExitUnknownPreset = 3;
constexpr int kExitInternalError = 4;

bool looks_like_path(const std::string& value) {
    return value.find('/') != std::string::npos || value.ends_with(".json") ||
           std::filesystem::exists(value);
}

template <typename T>
T load_config_arg(const std::string& value, T (*preset_loader)(const std::string&),
                  const char* kind) {
    if (!looks_like_path(value)) return preset_loader(value);
    ParsedConfig parsed = parse_config_file(value);
    if (auto* cfg = std::get_if<T>(&parsed)) return *cfg;
    throw ConfigError(value + ": expected a config of kind '" + std::string(kind) + "'");
}

// Optional default output directory; never affects any numeric result.
std::string resolve_out_path(const std::string& out) {
    std::filesystem::path p(out);
    if (p.is_absolute()) return out;
    const char* dir = std::getenv("EDGEPROFILER_OUT_DIR");
    if (dir == nullptr || *dir == '\0') return out;
    return (std::filesystem::path(dir) / p).string();
}

void write_output(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::string path = resolve_out_path(out);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file: " + path);
    f << text;
}

std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> names;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) names.push_back(item);
    return names;
}

struct ProfileArgs {
    std::string model;
    std::string device;
    std::string precision;
    std::string mode = "serial";
    std::string format = "json";
    std::string out;
};

struct SweepArgs {
    std::string devices;
    std::string models;
    std::string precisions;
    std::string mode = "serial";
    std::string format = "json";
    std::string out;
    std::string plot_data;
    int jobs = 1;
};

struct QuantArgs {
    std::string input;
    std::string scheme = "symmetric";
    std::string granularity = "per_tensor";
    std::int64_t bits = 8;
    std::string out;
};

int run_profile_command(const ProfileArgs& args) {
    auto model = load_config_arg<ModelConfig>(args.model, load_model_preset, "model");
    auto device = load_config_arg<HardwareConfig>(args.device, load_device_preset, "hardware");
    auto precision =
        load_config_arg<PrecisionSpec>(args.precision, load_precision_preset, "precision");
    ProfileReport report =
        run_profile(model, device, precision, aggregation_mode_from_string(args.mode));
    write_output(render(report, output_format_from_string(args.format)), args.out);
    return kExitOk;
}

int run_sweep_command(const SweepArgs& args) {
    SweepResult sweep =
        run_sweep(split_names(args.devices), split_names(args.models),
                  split_names(args.precisions), aggregation_mode_from_string(args.mode),
                  args.jobs);
    write_output(render(sweep, output_format_from_string(args.format)), args.out);
    if (!args.plot_data.empty()) {
        std::string path = resolve_out_path(args.plot_data);
        std::ofstream f(path, std::ios::binary);
        if (!f) throw ConfigError("cannot open plot-data file: " + path);
        f << emit_plot_data(sweep);
    }
    return kExitOk;
}

int run_quant_demo(const QuantArgs& args) {
    using namespace edgeprofiler::quant;
    Tensor tensor = read_tensor_file(args.input);
    Scheme scheme = scheme_from_string(args.scheme);
    Granularity granularity = granularity_from_string(args.granularity);
    QuantParams params = calibrate(tensor, scheme, granularity, args.bits);
    Tensor reconstructed = fake_quantize(tensor, params);
    ErrorStats stats = quant_error_stats(tensor, reconstructed);

    nlohmann::ordered_json j;
    j["scheme"] = to_string(scheme);
    j["granularity"] = to_string(granularity);
    j["bits"] = params.bits;
    j["qmin"] = params.qmin();
    j["qmax"] = params.qmax();
    j["channels"] = tensor.channels;
    j["elements_per_channel"] = tensor.elements_per_channel;
    j["scales"] = params.scales;
    if (!params.zero_points.empty()) j["zero_points"] = params.zero_points;
    nlohmann::ordered_json err;
    err["mse"] = stats.mse;
    err["max_abs"] = stats.max_abs;
    err["mean_abs"] = stats.mean_abs;
    j["error_stats"] = err;
    write_output(j.dump(2) + "\n", args.out);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Analytical inference profiler for transformer models on edge hardware"};
    app.require_subcommand(1);

    ProfileArgs profile_args;
    auto* profile = app.add_subcommand("profile", "Profile one model/device/precision combination");
    profile->add_option("--model", profile_args.model, "Model preset name or config file")
        ->required();
    profile->add_option("--device", profile_args.device, "Device preset name or config file")
        ->required();
    profile->add_option("--precision", profile_args.precision, "Precision name or config file")
        ->required();
    profile->add_option("--mode", profile_args.mode, "Latency aggregation: serial or overlapped");
    profile->add_option("--format", profile_args.format, "Output format: json, csv or markdown");
    profile->add_option("--out", profile_args.out, "Write output to this file instead of stdout");

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "Profile a device x model x precision grid");
    sweep->add_option("--devices", sweep_args.devices, "Comma-separated device preset names")
        ->required();
    sweep->add_option("--models", sweep_args.models, "Comma-separated model preset names")
        ->required();
    sweep->add_option("--precisions", sweep_args.precisions, "Comma-separated precision names")
        ->required();
    sweep->add_option("--mode", sweep_args.mode, "Latency aggregation: serial or overlapped");
    sweep->add_option("--format", sweep_args.format, "Output format: json, csv or markdown");
    sweep->add_option("--out", sweep_args.out, "Write output to this file instead of stdout");
    sweep->add_option("--plot-data", sweep_args.plot_data,
                      "Also write grouped per-metric series to this file");
    sweep->add_option("--jobs", sweep_args.jobs,
                      "Evaluate sweep cells with this many threads (output is identical)");

    auto* presets = app.add_subcommand("presets", "Preset catalog commands");
    presets->require_subcommand(1);
    auto* presets_list = presets->add_subcommand("list", "List shipped presets with provenance");

    auto* quant = app.add_subcommand("quant", "Quantization utilities");
    quant->require_subcommand(1);
    QuantArgs quant_args;
    auto* quant_demo =
        quant->add_subcommand("demo", "Calibrate, fake-quantize and score a tensor file");
    quant_demo->add_option("--input", quant_args.input, "Tensor text file")->required();
    quant_demo->add_option("--bits", quant_args.bits, "Bit width (2..30)");
    quant_demo->add_option("--scheme", quant_args.scheme, "symmetric or asymmetric");
    quant_demo->add_option("--granularity", quant_args.granularity, "per_tensor or per_channel");
    quant_demo->add_option("--out", quant_args.out, "Write output to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfigError;
    }

    try {
        if (profile->parsed()) return run_profile_command(profile_args);
        if (sweep->parsed()) return run_sweep_command(sweep_args);
        if (presets_list->parsed()) {
            std::cout << format_preset_listing(preset_catalog());
            return kExitOk;
        }
        if (quant_demo->parsed()) return run_quant_demo(quant_args);
        std::cerr << "no subcommand selected\n";
        return kExitConfigError;
    } catch (const UnknownPresetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnknownPreset;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    }
}
