#include "edgeprofiler/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "canonical_json.hpp"
#include "config_json.hpp"
#include "edgeprofiler/presets.hpp"

namespace edgeprofiler {

namespace {

using nlohmann::ordered_json;

// Byte quantities travel through JSON as exact eighths; anything else means
// the document was not produced by the canonical writer.
Ratio ratio_from_json_number(const ordered_json& v, const char* field) {
    if (v.is_number_integer() || v.is_number_unsigned())
        return Ratio(v.get<std::int64_t>());
    double d = v.get<double>();
    double scaled = d * 8.0;
    if (!(std::abs(d) <= 1125899906842624.0) || scaled != std::floor(scaled))
        throw ConfigError(std::string(field) + " is not an exact multiple of 1/8");
    return Ratio(static_cast<std::int64_t>(scaled), 8);
}

ordered_json report_to_tree(const ProfileReport& r) {
    ordered_json j;
    j["schema_version"] = r.schema_version;

    ordered_json inputs;
    inputs["model"] = detail::to_json_tree(r.model);
    inputs["hardware"] = detail::to_json_tree(r.hardware);
    inputs["precision"] = detail::to_json_tree(r.precision);
    inputs["aggregation_mode"] = to_string(r.mode);
    j["inputs"] = inputs;

    // Bandwidths, utilizations and energy coefficients are estimates unless
    // the hardware entry says otherwise; repeat them here so no output can
    // be read as a measured number.
    ordered_json assumptions;
    assumptions["hardware_provenance"] = r.hardware.provenance;
    assumptions["hardware_notes"] = r.hardware.notes;
    ordered_json assumed;
    assumed["peak_flops"] = r.hardware.peak_flops;
    assumed["mem_bw"] = r.hardware.mem_bw;
    assumed["storage_bw"] = r.hardware.storage_bw;
    assumed["h2d_bw"] = r.hardware.h2d_bw;
    assumed["net_bw"] = r.hardware.net_bw;
    assumed["u_compute"] = r.hardware.u_compute;
    assumed["u_memory"] = r.hardware.u_memory;
    assumed["u_storage"] = r.hardware.u_storage;
    assumed["u_h2d"] = r.hardware.u_h2d;
    assumed["u_net"] = r.hardware.u_net;
    assumed["e_flop"] = r.hardware.e_flop;
    assumed["e_byte"] = r.hardware.e_byte;
    assumptions["values"] = assumed;
    j["assumptions"] = assumptions;

    j["param_count"] = r.params;
    j["flops_per_token"] = r.flops;

    ordered_json mem;
    mem["weights"] = r.memory.weights.to_double();
    mem["activations"] = r.memory.activations.to_double();
    mem["kv_cache"] = r.memory.kv_cache.to_double();
    mem["total"] = r.memory.total().to_double();
    j["memory_footprint_bytes"] = mem;

    j["arithmetic_intensity_flops_per_byte"] = r.intensity;

    ordered_json lat;
    lat["t_comp"] = r.latency.t_comp;
    lat["t_mem"] = r.latency.t_mem;
    lat["t_io"] = r.latency.t_io;
    lat["t_h2d"] = r.latency.t_h2d;
    lat["t_net"] = r.latency.t_net;
    lat["t_total"] = r.latency.t_total;
    ordered_json scope;
    scope["t_comp"] = "per_token";
    scope["t_mem"] = "per_token";
    scope["t_io"] = "per_session";
    scope["t_h2d"] = "per_session";
    scope["t_net"] = "per_token";
    lat["stage_scope"] = scope;
    j["latency_seconds"] = lat;

    ordered_json ops;
    auto op = [](std::int64_t flops, double seconds) {
        ordered_json o;
        o["flops"] = flops;
        o["seconds"] = seconds;
        return o;
    };
    ops["attn_proj"] = op(r.operators.attn_proj_flops, r.operators.attn_proj_s);
    ops["kv_matmul"] = op(r.operators.kv_matmul_flops, r.operators.kv_matmul_s);
    ops["mlp"] = op(r.operators.mlp_flops, r.operators.mlp_s);
    ops["layernorm_softmax"] =
        op(r.operators.layernorm_softmax_flops, r.operators.layernorm_softmax_s);
    j["operator_breakdown"] = ops;

    ordered_json energy;
    energy["e_compute"] = r.energy.e_compute;
    energy["e_data"] = r.energy.e_data;
    energy["e_total"] = r.energy.e_total;
    j["energy_joules"] = energy;

    return j;
}

ProfileReport report_from_tree(const ordered_json& j) {
    if (!j.is_object()) throw ConfigError("report: expected a JSON object");
    ProfileReport r;
    try {
        r.schema_version = j.at("schema_version").get<int>();
        const auto& inputs = j.at("inputs");
        r.model = detail::model_from_json(inputs.at("model"), "report.inputs.model");
        r.hardware = detail::hardware_from_json(inputs.at("hardware"), "report.inputs.hardware");
        r.precision =
            detail::precision_from_json(inputs.at("precision"), "report.inputs.precision");
        r.mode = aggregation_mode_from_string(inputs.at("aggregation_mode").get<std::string>());

        r.params = j.at("param_count").get<std::int64_t>();
        r.flops = j.at("flops_per_token").get<std::int64_t>();

        const auto& mem = j.at("memory_footprint_bytes");
        r.memory.weights = ratio_from_json_number(mem.at("weights"), "memory.weights");
        r.memory.activations = ratio_from_json_number(mem.at("activations"), "memory.activations");
        r.memory.kv_cache = ratio_from_json_number(mem.at("kv_cache"), "memory.kv_cache");

        r.intensity = j.at("arithmetic_intensity_flops_per_byte").get<double>();

        const auto& lat = j.at("latency_seconds");
        r.latency.t_comp = lat.at("t_comp").get<double>();
        r.latency.t_mem = lat.at("t_mem").get<double>();
        r.latency.t_io = lat.at("t_io").get<double>();
        r.latency.t_h2d = lat.at("t_h2d").get<double>();
        r.latency.t_net = lat.at("t_net").get<double>();
        r.latency.t_total = lat.at("t_total").get<double>();
        r.latency.mode = r.mode;

        const auto& ops = j.at("operator_breakdown");
        r.operators.attn_proj_flops = ops.at("attn_proj").at("flops").get<std::int64_t>();
        r.operators.attn_proj_s = ops.at("attn_proj").at("seconds").get<double>();
        r.operators.kv_matmul_flops = ops.at("kv_matmul").at("flops").get<std::int64_t>();
        r.operators.kv_matmul_s = ops.at("kv_matmul").at("seconds").get<double>();
        r.operators.mlp_flops = ops.at("mlp").at("flops").get<std::int64_t>();
        r.operators.mlp_s = ops.at("mlp").at("seconds").get<double>();
        r.operators.layernorm_softmax_flops =
            ops.at("layernorm_softmax").at("flops").get<std::int64_t>();
        r.operators.layernorm_softmax_s = ops.at("layernorm_softmax").at("seconds").get<double>();

        const auto& energy = j.at("energy_joules");
        r.energy.e_compute = energy.at("e_compute").get<double>();
        r.energy.e_data = energy.at("e_data").get<double>();
        r.energy.e_total = energy.at("e_total").get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("report: ") + e.what());
    }
    return r;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

std::string csv_row(const ProfileReport& r) {
    using detail::canonical_number;
    std::ostringstream row;
    row << csv_escape(r.hardware.name) << ',' << csv_escape(r.model.name) << ','
        << csv_escape(r.precision.name) << ',' << r.precision.bits_per_element << ','
        << to_string(r.mode) << ',' << r.params << ',' << r.flops << ','
        << canonical_number(r.memory.weights.to_double()) << ','
        << canonical_number(r.memory.activations.to_double()) << ','
        << canonical_number(r.memory.kv_cache.to_double()) << ','
        << canonical_number(r.memory.total().to_double()) << ','
        << canonical_number(r.intensity) << ',' << canonical_number(r.latency.t_comp) << ','
        << canonical_number(r.latency.t_mem) << ',' << canonical_number(r.latency.t_io) << ','
        << canonical_number(r.latency.t_h2d) << ',' << canonical_number(r.latency.t_net) << ','
        << canonical_number(r.latency.t_total) << ','
        << canonical_number(r.operators.attn_proj_s) << ','
        << canonical_number(r.operators.kv_matmul_s) << ','
        << canonical_number(r.operators.mlp_s) << ','
        << canonical_number(r.operators.layernorm_softmax_s) << ','
        << canonical_number(r.energy.e_compute) << ',' << canonical_number(r.energy.e_data) << ','
        << canonical_number(r.energy.e_total);
    return row.str();
}

std::string human_bytes(double bytes) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f GB", bytes / 1e9);
    return buf;
}

std::string human_seconds(double s) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4g s", s);
    return buf;
}

std::string markdown_report(const ProfileReport& r) {
    std::ostringstream out;
    out << "# Profile: " << r.model.name << " on " << r.hardware.name << " @ " << r.precision.name
        << "\n\n";
    out << "- aggregation mode: " << to_string(r.mode) << "\n";
    out << "- parameters: " << r.params << "\n";
    out << "- FLOPs/token: " << r.flops << "\n";
    out << "- memory footprint: " << human_bytes(r.memory.total().to_double()) << " (weights "
        << human_bytes(r.memory.weights.to_double()) << ", activations "
        << human_bytes(r.memory.activations.to_double()) << ", KV cache "
        << human_bytes(r.memory.kv_cache.to_double()) << ")\n";
    char ai[64];
    std::snprintf(ai, sizeof(ai), "%.4f", r.intensity);
    out << "- arithmetic intensity: " << ai << " FLOPs/byte\n\n";
    out << "| stage | seconds | scope |\n|---|---|---|\n";
    out << "| compute | " << human_seconds(r.latency.t_comp) << " | per token |\n";
    out << "| memory | " << human_seconds(r.latency.t_mem) << " | per token |\n";
    out << "| storage I/O | " << human_seconds(r.latency.t_io) << " | per session |\n";
    out << "| host-to-device | " << human_seconds(r.latency.t_h2d) << " | per session |\n";
    out << "| network | " << human_seconds(r.latency.t_net) << " | per token |\n";
    out << "| **total** | " << human_seconds(r.latency.t_total) << " | |\n\n";
    out << "| operator | FLOPs | seconds |\n|---|---|---|\n";
    out << "| attention projections | " << r.operators.attn_proj_flops << " | "
        << human_seconds(r.operators.attn_proj_s) << " |\n";
    out << "| KV matmuls | " << r.operators.kv_matmul_flops << " | "
        << human_seconds(r.operators.kv_matmul_s) << " |\n";
    out << "| MLP | " << r.operators.mlp_flops << " | " << human_seconds(r.operators.mlp_s)
        << " |\n";
    out << "| layernorm+softmax | " << r.operators.layernorm_softmax_flops << " | "
        << human_seconds(r.operators.layernorm_softmax_s) << " |\n\n";
    char energy[128];
    std::snprintf(energy, sizeof(energy), "%.6g J (compute %.6g J, data %.6g J)",
                  r.energy.e_total, r.energy.e_compute, r.energy.e_data);
    out << "Energy per token: " << energy << "\n";
    return out.str();
}

std::string markdown_sweep(const SweepResult& sweep) {
    std::ostringstream out;
    out << "# Sweep results\n";
    std::string device;
    // Baseline for the speed ratio is the widest precision of each
    // (device, model) group; reports are ordered bits-descending within one.
    double baseline_total = 0;
    std::string group_model;
    for (const auto& r : sweep.reports) {
        if (r.hardware.name != device) {
            device = r.hardware.name;
            group_model.clear();
            out << "\n## " << device << "\n\n";
            out << "| model | precision | params | memory | t_total | speedup |\n";
            out << "|---|---|---|---|---|---|\n";
        }
        if (r.model.name != group_model) {
            group_model = r.model.name;
            baseline_total = r.latency.t_total;
        }
        char speed[32];
        std::snprintf(speed, sizeof(speed), "%.2fx", baseline_total / r.latency.t_total);
        out << "| " << r.model.name << " | " << r.precision.name << " | " << r.params << " | "
            << human_bytes(r.memory.total().to_double()) << " | "
            << human_seconds(r.latency.t_total) << " | " << speed << " |\n";
    }
    return out.str();
}

} // namespace

OutputFormat output_format_from_string(const std::string& s) {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    if (s == "markdown") return OutputFormat::markdown;
    throw ConfigError("unknown output format '" + s + "' (expected json, csv or markdown)");
}

ProfileReport run_profile(const ModelConfig& m, const HardwareConfig& hw, const PrecisionSpec& p,
                          AggregationMode mode) {
    m.validate();
    hw.validate();
    p.validate();
    ProfileReport r;
    r.model = m;
    r.hardware = hw;
    r.precision = p;
    r.mode = mode;
    r.params = param_count(m);
    r.flops = flops_per_token(m);
    r.memory = memory_footprint(m, p);
    r.intensity = arithmetic_intensity(m, p);
    r.latency = latency_breakdown(m, hw, p, mode);
    r.operators = operator_breakdown(m, hw, p);
    r.energy = energy_per_token(m, hw, p);
    return r;
}

SweepResult run_sweep(const std::vector<std::string>& devices,
                      const std::vector<std::string>& models,
                      const std::vector<std::string>& precisions, AggregationMode mode, int jobs) {
    // Resolve every name before evaluating anything.
    std::vector<HardwareConfig> hw;
    std::vector<ModelConfig> m;
    std::vector<PrecisionSpec> p;
    hw.reserve(devices.size());
    m.reserve(models.size());
    p.reserve(precisions.size());
    for (const auto& name : devices) hw.push_back(load_device_preset(name));
    for (const auto& name : models) m.push_back(load_model_preset(name));
    for (const auto& name : precisions) p.push_back(load_precision_preset(name));
    return run_sweep(std::move(hw), std::move(m), std::move(p), mode, jobs);
}

SweepResult run_sweep(std::vector<HardwareConfig> devices, std::vector<ModelConfig> models,
                      std::vector<PrecisionSpec> precisions, AggregationMode mode, int jobs) {
    if (devices.empty() || models.empty() || precisions.empty())
        throw ConfigError("sweep needs at least one device, model and precision");
    if (jobs < 1) throw ConfigError("jobs must be >= 1");
    for (const auto& d : devices) d.validate();
    for (const auto& m : models) m.validate();
    for (const auto& p : precisions) p.validate();

    auto by_name = [](const auto& a, const auto& b) { return a.name < b.name; };
    std::sort(devices.begin(), devices.end(), by_name);
    std::sort(models.begin(), models.end(), by_name);
    std::sort(precisions.begin(), precisions.end(), [](const auto& a, const auto& b) {
        if (a.bits_per_element != b.bits_per_element)
            return a.bits_per_element > b.bits_per_element;
        return a.name < b.name;
    });

    struct Cell {
        const HardwareConfig* hw;
        const ModelConfig* m;
        const PrecisionSpec* p;
    };
    std::vector<Cell> cells;
    cells.reserve(devices.size() * models.size() * precisions.size());
    for (const auto& d : devices)
        for (const auto& m : models)
            for (const auto& p : precisions) cells.push_back({&d, &m, &p});

    SweepResult result;
    result.reports.resize(cells.size());
    auto evaluate = [&](std::size_t index) {
        const Cell& c = cells[index];
        result.reports[index] = run_profile(*c.m, *c.hw, *c.p, mode);
    };

    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), cells.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) evaluate(i);
    } else {
        // Cells are pure and write disjoint slots, so a strided split is
        // race-free and the output order never depends on scheduling.
        std::vector<std::thread> pool;
        pool.reserve(workers);
        std::exception_ptr failure;
        std::mutex failure_mutex;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < cells.size(); i += workers) evaluate(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }
    return result;
}

const std::string& csv_header() {
    static const std::string header =
        "device,model,precision,bits_per_element,aggregation_mode,param_count,flops_per_token,"
        "weights_bytes,activations_bytes,kv_cache_bytes,memory_total_bytes,"
        "arithmetic_intensity_flops_per_byte,t_comp_s,t_mem_s,t_io_s,t_h2d_s,t_net_s,t_total_s,"
        "attn_proj_s,kv_matmul_s,mlp_s,layernorm_softmax_s,e_compute_j,e_data_j,e_total_j";
    return header;
}

std::string render(const ProfileReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::json:
            return detail::canonical_dump(report_to_tree(report));
        case OutputFormat::csv:
            return csv_header() + "\n" + csv_row(report) + "\n";
        case OutputFormat::markdown:
            return markdown_report(report);
    }
    throw InternalError("unhandled output format");
}

std::string render(const SweepResult& sweep, OutputFormat format) {
    switch (format) {
        case OutputFormat::json: {
            ordered_json j;
            j["schema_version"] = kReportSchemaVersion;
            ordered_json reports = ordered_json::array();
            for (const auto& r : sweep.reports) reports.push_back(report_to_tree(r));
            j["reports"] = reports;
            return detail::canonical_dump(j);
        }
        case OutputFormat::csv: {
            std::ostringstream out;
            out << csv_header() << "\n";
            for (const auto& r : sweep.reports) out << csv_row(r) << "\n";
            return out.str();
        }
        case OutputFormat::markdown:
            return markdown_sweep(sweep);
    }
    throw InternalError("unhandled output format");
}

ProfileReport report_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("report: ") + e.what());
    }
    return report_from_tree(j);
}

SweepResult sweep_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("sweep: ") + e.what());
    }
    SweepResult sweep;
    try {
        for (const auto& entry : j.at("reports")) sweep.reports.push_back(report_from_tree(entry));
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("sweep: ") + e.what());
    }
    return sweep;
}

std::string emit_plot_data(const SweepResult& sweep) {
    if (sweep.reports.empty()) throw ConfigError("cannot emit plot data for an empty sweep");

    std::vector<std::string> models;
    for (const auto& r : sweep.reports)
        if (std::find(models.begin(), models.end(), r.model.name) == models.end())
            models.push_back(r.model.name);
    std::sort(models.begin(), models.end());

    struct Metric {
        const char* name;
        const char* unit;
        double (*value)(const ProfileReport&);
    };
    static const Metric kMetrics[] = {
        {"t_mem", "seconds", [](const ProfileReport& r) { return r.latency.t_mem; }},
        {"t_io", "seconds", [](const ProfileReport& r) { return r.latency.t_io; }},
        {"t_h2d", "seconds", [](const ProfileReport& r) { return r.latency.t_h2d; }},
        {"t_net", "seconds", [](const ProfileReport& r) { return r.latency.t_net; }},
        {"t_total", "seconds", [](const ProfileReport& r) { return r.latency.t_total; }},
        {"e_total", "joules", [](const ProfileReport& r) { return r.energy.e_total; }},
    };

    ordered_json root;
    root["schema_version"] = kReportSchemaVersion;
    ordered_json groups = ordered_json::array();
    for (const auto& metric : kMetrics) {
        ordered_json group;
        group["metric"] = metric.name;
        group["unit"] = metric.unit;
        ordered_json series = ordered_json::array();
        for (const auto& model : models) {
            ordered_json entry;
            entry["model"] = model;
            ordered_json points = ordered_json::array();
            for (const auto& r : sweep.reports) { // sweep order: device, model, bits desc
                if (r.model.name != model) continue;
                ordered_json point;
                point["device"] = r.hardware.name;
                point["precision"] = r.precision.name;
                point["value"] = metric.value(r);
                points.push_back(point);
            }
            entry["points"] = points;
            series.push_back(entry);
        }
        group["series"] = series;
        groups.push_back(group);
    }
    root["groups"] = groups;
    return detail::canonical_dump(root);
}

} // namespace edgeprofiler
