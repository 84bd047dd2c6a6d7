#include <benchmark/benchmark.h>

#include <random>

#include "edgeprofiler/presets.hpp"
#include "edgeprofiler/quant.hpp"
#include "edgeprofiler/report.hpp"

using namespace edgeprofiler;

namespace {

const ModelConfig kModel = load_model_preset("tinyllama-1.1b");
const HardwareConfig kDevice = load_device_preset("raspberry-pi-4");
const PrecisionSpec kPrecision = load_precision_preset("INT8");

void BM_ParamCount(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(param_count(kModel));
}
BENCHMARK(BM_ParamCount);

void BM_FlopsPerToken(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(flops_per_token(kModel));
}
BENCHMARK(BM_FlopsPerToken);

void BM_MemoryFootprint(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(memory_footprint(kModel, kPrecision).total());
}
BENCHMARK(BM_MemoryFootprint);

void BM_LatencyBreakdown(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(latency_breakdown(kModel, kDevice, kPrecision));
}
BENCHMARK(BM_LatencyBreakdown);

void BM_RunProfile(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(run_profile(kModel, kDevice, kPrecision));
}
BENCHMARK(BM_RunProfile);

void BM_RenderJson(benchmark::State& state) {
    auto report = run_profile(kModel, kDevice, kPrecision);
    for (auto _ : state) benchmark::DoNotOptimize(render(report, OutputFormat::json));
}
BENCHMARK(BM_RenderJson);

void BM_FullSweep(benchmark::State& state) {
    std::vector<std::string> devices = {"jetson-orin-nano-super", "raspberry-pi-4",
                                        "raspberry-pi-5"};
    std::vector<std::string> models = {"deepseek-r1-1.5b", "gemma3-1b", "llama3.2-1b",
                                       "tinyllama-1.1b"};
    std::vector<std::string> precisions = {"FP32", "FP16", "INT8", "INT4"};
    for (auto _ : state) {
        auto sweep = run_sweep(devices, models, precisions, AggregationMode::serial,
                               static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(sweep.reports.size());
    }
}
BENCHMARK(BM_FullSweep)->Arg(1)->Arg(4);

quant::Tensor random_tensor(std::int64_t channels, std::int64_t elems) {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> val(-10.0, 10.0);
    auto t = quant::Tensor::zeros(channels, elems);
    for (auto& v : t.values) v = val(rng);
    return t;
}

void BM_Calibrate(benchmark::State& state) {
    auto t = random_tensor(256, state.range(0) / 256);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            quant::calibrate(t, quant::Scheme::symmetric, quant::Granularity::per_channel, 8));
    state.SetItemsProcessed(state.iterations() * t.size());
}
BENCHMARK(BM_Calibrate)->Arg(1 << 16)->Arg(1 << 20);

void BM_FakeQuantize(benchmark::State& state) {
    auto t = random_tensor(256, state.range(0) / 256);
    auto params =
        quant::calibrate(t, quant::Scheme::symmetric, quant::Granularity::per_channel, 8);
    for (auto _ : state) benchmark::DoNotOptimize(quant::fake_quantize(t, params));
    state.SetItemsProcessed(state.iterations() * t.size());
}
BENCHMARK(BM_FakeQuantize)->Arg(1 << 16)->Arg(1 << 20);

} // namespace

BENCHMARK_MAIN();
