#include "canonical_json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "edgeprofiler/errors.hpp"

namespace edgeprofiler::detail {

namespace {

constexpr double kEighthLimit = 1125899906842624.0; // 2^50

bool is_exact_eighth(double v) {
    double scaled = v * 8.0;
    return std::abs(v) <= kEighthLimit && scaled == std::floor(scaled);
}

std::string exact_eighth_text(double v) {
    static const char* kFractions[8] = {"",     ".125", ".25", ".375",
                                        ".5",   ".625", ".75", ".875"};
    auto eighths = static_cast<long long>(v * 8.0);
    bool negative = eighths < 0;
    unsigned long long magnitude = negative ? -static_cast<unsigned long long>(eighths)
                                            : static_cast<unsigned long long>(eighths);
    std::string out = negative ? "-" : "";
    out += std::to_string(magnitude / 8);
    out += kFractions[magnitude % 8];
    return out;
}

std::string nine_digit_text(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

void dump_value(const nlohmann::ordered_json& j, std::string& out, int indent);

void dump_object(const nlohmann::ordered_json& j, std::string& out, int indent) {
    if (j.empty()) {
        out += "{}";
        return;
    }
    out += "{\n";
    std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    bool first = true;
    for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        out += nlohmann::ordered_json(key).dump(); // quoted + escaped
        out += ": ";
        dump_value(value, out, indent + 2);
    }
    out += "\n";
    out.append(static_cast<std::size_t>(indent), ' ');
    out += "}";
}

void dump_array(const nlohmann::ordered_json& j, std::string& out, int indent) {
    if (j.empty()) {
        out += "[]";
        return;
    }
    out += "[\n";
    std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    bool first = true;
    for (const auto& value : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        dump_value(value, out, indent + 2);
    }
    out += "\n";
    out.append(static_cast<std::size_t>(indent), ' ');
    out += "]";
}

void dump_value(const nlohmann::ordered_json& j, std::string& out, int indent) {
    switch (j.type()) {
        case nlohmann::ordered_json::value_t::object:
            dump_object(j, out, indent);
            break;
        case nlohmann::ordered_json::value_t::array:
            dump_array(j, out, indent);
            break;
        case nlohmann::ordered_json::value_t::string:
            out += j.dump();
            break;
        case nlohmann::ordered_json::value_t::boolean:
            out += j.get<bool>() ? "true" : "false";
            break;
        case nlohmann::ordered_json::value_t::number_integer:
            out += std::to_string(j.get<std::int64_t>());
            break;
        case nlohmann::ordered_json::value_t::number_unsigned:
            out += std::to_string(j.get<std::uint64_t>());
            break;
        case nlohmann::ordered_json::value_t::number_float:
            out += canonical_number(j.get<double>());
            break;
        case nlohmann::ordered_json::value_t::null:
            out += "null";
            break;
        default:
            throw InternalError("unexpected JSON value type in canonical dump");
    }
}

} // namespace

std::string canonical_number(double value) {
    if (!std::isfinite(value)) throw InternalError("non-finite number in canonical output");
    if (value == 0) return "0"; // covers -0.0
    if (is_exact_eighth(value)) return exact_eighth_text(value);
    std::string text = nine_digit_text(value);
    // 9-digit rounding can land on an exact eighth (e.g. an integral value);
    // normalize so reparsing and reprinting reproduces the same bytes.
    double reparsed = std::strtod(text.c_str(), nullptr);
    if (is_exact_eighth(reparsed)) return exact_eighth_text(reparsed);
    return text;
}

std::string canonical_dump(const nlohmann::ordered_json& j) {
    std::string out;
    dump_value(j, out, 0);
    out += "\n";
    return out;
}

} // namespace edgeprofiler::detail
