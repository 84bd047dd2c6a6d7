#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "edgeprofiler/analytic.hpp"
#include "edgeprofiler/config.hpp"
#include "edgeprofiler/energy.hpp"
#include "edgeprofiler/latency.hpp"

namespace edgeprofiler {

inline constexpr int kReportSchemaVersion = 1;

// One full profile: the echoed inputs plus every estimate the core modules
// produce for them. Self-contained by construction; re-running the core
// operations on the echoed inputs reproduces every number.
struct ProfileReport {
    ModelConfig model;
    HardwareConfig hardware;
    PrecisionSpec precision;
    AggregationMode mode = AggregationMode::serial;

    std::int64_t params = 0;
    std::int64_t flops = 0;
    MemoryFootprint memory;
    double intensity = 0; // FLOPs per byte
    LatencyBreakdown latency;
    OperatorBreakdown operators;
    EnergyEstimate energy;
    int schema_version = kReportSchemaVersion;
};

// Cartesian device x model x precision sweep, ordered lexicographically by
// (device name, model name, precision bits descending).
struct SweepResult {
    std::vector<ProfileReport> reports;
};

enum class OutputFormat { json, csv, markdown };
OutputFormat output_format_from_string(const std::string& s);

ProfileReport run_profile(const ModelConfig& m, const HardwareConfig& hw, const PrecisionSpec& p,
                          AggregationMode mode = AggregationMode::serial);

// Resolves every name against the preset catalog up front (failing fast
// before any evaluation), then profiles the full cartesian product.
// `jobs` > 1 evaluates cells concurrently; output is identical either way.
SweepResult run_sweep(const std::vector<std::string>& devices,
                      const std::vector<std::string>& models,
                      const std::vector<std::string>& precisions,
                      AggregationMode mode = AggregationMode::serial, int jobs = 1);

SweepResult run_sweep(std::vector<HardwareConfig> devices, std::vector<ModelConfig> models,
                      std::vector<PrecisionSpec> precisions,
                      AggregationMode mode = AggregationMode::serial, int jobs = 1);

// Canonical JSON is the lossless interchange form; CSV flattens one report
// per row under a fixed documented header; markdown renders human-readable
// comparison tables.
std::string render(const ProfileReport& report, OutputFormat format);
std::string render(const SweepResult& sweep, OutputFormat format);

// Inverse of the canonical JSON forms, for tooling and round-trip checks.
ProfileReport report_from_json(const std::string& text);
SweepResult sweep_from_json(const std::string& text);

// Fixed CSV column list shared by single-report and sweep rendering.
const std::string& csv_header();

// Six metric series (memory-bound, storage I/O, host-to-device, network,
// end-to-end latency, energy per token), one series per model, one point per
// (device, precision), in canonical JSON.
std::string emit_plot_data(const SweepResult& sweep);

} // namespace edgeprofiler
