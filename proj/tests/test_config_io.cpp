#include <doctest.h>

#include <random>
#include <string>
#include <variant>

#include "edgeprofiler/config_io.hpp"
#include "edgeprofiler/presets.hpp"

using namespace edgeprofiler;

namespace {

const char* kTinyLlamaJson = R"({
  "kind": "model",
  "name": "tinyllama-1.1b",
  "layers": 22,
  "hidden_dim": 2048,
  "intermediate_dim": 5632,
  "attention_heads": 32,
  "vocab_size": 32000,
  "seq_len": 2048,
  "provenance": "assumed",
  "notes": "fixture"
})";

} // namespace

TEST_CASE("model config round-trips through its serialized form") {
    auto parsed = parse_config_text(kTinyLlamaJson);
    auto* m = std::get_if<ModelConfig>(&parsed);
    REQUIRE(m != nullptr);
    CHECK(m->layers == 22);
    CHECK(m->hidden_dim == 2048);
    std::string serialized = serialize_config(*m);
    auto reparsed = parse_config_text(serialized);
    auto* m2 = std::get_if<ModelConfig>(&reparsed);
    REQUIRE(m2 != nullptr);
    CHECK(serialize_config(*m2) == serialized);
}

TEST_CASE("hardware and precision configs round-trip too") {
    auto hw = load_device_preset("raspberry-pi-5");
    auto reparsed = parse_config_text(serialize_config(hw));
    CHECK(serialize_config(std::get<HardwareConfig>(reparsed)) == serialize_config(hw));

    auto p = load_precision_preset("INT4");
    auto reparsed_p = parse_config_text(serialize_config(p));
    CHECK(serialize_config(std::get<PrecisionSpec>(reparsed_p)) == serialize_config(p));
}

TEST_CASE("out-of-range utilization names the field") {
    std::string bad = R"({"kind":"hardware","name":"x","peak_flops":1,"mem_bw":1,
                          "storage_bw":1,"h2d_bw":1,"net_bw":1,"u_compute":1.3})";
    try {
        parse_config_text(bad);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        std::string msg = e.what();
        CHECK(msg.find("u_compute") != std::string::npos);
        CHECK(msg.find("(0, 1]") != std::string::npos);
    }
}

TEST_CASE("unknown keys are hard errors with a suggestion") {
    std::string bad = R"({"kind":"hardware","name":"x","peak_gflops":1,"mem_bw":1,
                          "storage_bw":1,"h2d_bw":1,"net_bw":1})";
    try {
        parse_config_text(bad);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        std::string msg = e.what();
        CHECK(msg.find("peak_gflops") != std::string::npos);
        CHECK(msg.find("peak_flops") != std::string::npos);
    }
}

TEST_CASE("missing required fields are reported by name") {
    std::string missing = R"({"kind":"model","layers":2,"hidden_dim":4,
                              "intermediate_dim":8,"vocab_size":10})";
    try {
        parse_config_text(missing);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("attention_heads") != std::string::npos);
    }
}

TEST_CASE("optional fields take documented defaults") {
    std::string minimal = R"({"kind":"model","layers":2,"hidden_dim":4,
                              "intermediate_dim":8,"attention_heads":2,"vocab_size":10})";
    auto m = std::get<ModelConfig>(parse_config_text(minimal));
    CHECK(m.name == "unnamed");
    CHECK(m.seq_len == 2048);
    CHECK(m.provenance == "assumed");

    std::string hw_minimal = R"({"kind":"hardware","peak_flops":1,"mem_bw":1,
                                 "storage_bw":1,"h2d_bw":1,"net_bw":1})";
    auto hw = std::get<HardwareConfig>(parse_config_text(hw_minimal));
    CHECK(hw.u_compute == 1.0);
    CHECK(hw.u_net == 1.0);
    CHECK(hw.e_flop == 0.0);
    CHECK(hw.peak_flops_per_precision.empty());
}

TEST_CASE("integer fields reject floats and strings") {
    std::string fractional = R"({"kind":"model","layers":2.5,"hidden_dim":4,
                                 "intermediate_dim":8,"attention_heads":2,"vocab_size":10})";
    CHECK_THROWS_AS(parse_config_text(fractional), ConfigError);
    std::string stringy = R"({"kind":"precision","name":"custom","bits_per_element":"8"})";
    CHECK_THROWS_AS(parse_config_text(stringy), ConfigError);
}

TEST_CASE("kind discriminator is validated") {
    CHECK_THROWS_AS(parse_config_text(R"({"layers":1})"), ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"kind":"gizmo"})"), ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"([1,2,3])"), ConfigError);
}

TEST_CASE("malformed JSON reports the origin") {
    try {
        parse_config_text("{not json", "fixture.json");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("fixture.json") != std::string::npos);
    }
}

TEST_CASE("per-precision overrides parse as a name->number map") {
    std::string text = R"({"kind":"hardware","name":"x","peak_flops":10,"mem_bw":1,
                           "storage_bw":1,"h2d_bw":1,"net_bw":1,
                           "peak_flops_per_precision":{"INT8":40,"INT4":80}})";
    auto hw = std::get<HardwareConfig>(parse_config_text(text));
    CHECK(hw.peak_flops_per_precision.at("INT8") == 40);
    CHECK(hw.peak_flops_per_precision.at("INT4") == 80);
    PrecisionSpec int8;
    int8.name = "INT8";
    int8.bits_per_element = 8;
    CHECK(hw.effective_peak_flops(int8) == 40);
    PrecisionSpec fp32;
    fp32.name = "FP32";
    fp32.bits_per_element = 32;
    CHECK(hw.effective_peak_flops(fp32) == 10);
}

TEST_CASE("missing file is a config error") {
    CHECK_THROWS_AS(parse_config_file("/nonexistent/path.json"), ConfigError);
}

TEST_CASE("serialization is a fixpoint for arbitrary finite numbers") {
    std::mt19937 rng(83);
    std::uniform_real_distribution<double> mag(-12.0, 12.0);
    std::uniform_real_distribution<double> mantissa(1.0, 10.0);
    std::uniform_real_distribution<double> util(1e-6, 1.0);
    for (int i = 0; i < 300; ++i) {
        HardwareConfig hw;
        hw.name = "fuzz";
        hw.peak_flops = mantissa(rng) * std::pow(10.0, mag(rng) + 3);
        hw.mem_bw = mantissa(rng) * std::pow(10.0, mag(rng));
        hw.storage_bw = mantissa(rng) * std::pow(10.0, mag(rng));
        hw.h2d_bw = mantissa(rng) * std::pow(10.0, mag(rng));
        hw.net_bw = mantissa(rng) * std::pow(10.0, mag(rng));
        hw.u_compute = util(rng);
        hw.u_memory = util(rng);
        hw.u_storage = util(rng);
        hw.u_h2d = util(rng);
        hw.u_net = util(rng);
        hw.e_flop = mantissa(rng) * std::pow(10.0, -mag(rng) - 8);
        hw.e_byte = mantissa(rng) * std::pow(10.0, -mag(rng) - 8);
        std::string once = serialize_config(hw);
        auto reparsed = std::get<HardwareConfig>(parse_config_text(once));
        CHECK(serialize_config(reparsed) == once);
    }
}
