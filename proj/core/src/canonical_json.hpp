#pragma once

#include <string>

#include <json.hpp>

namespace edgeprofiler::detail {

// Canonical number text. Integers print exactly. Floats that are exact
// multiples of 1/8 (every bits/8-derived byte quantity) print as exact
// fixed-point decimals; everything else uses 9 significant digits (C "%g"
// notation rules). Output is normalized so parse-then-reprint is
// byte-stable.
std::string canonical_number(double value);

// Serializer with the canonical number rules, insertion-ordered keys and
// two-space indentation. The one JSON form reports and plot data are
// emitted in.
std::string canonical_dump(const nlohmann::ordered_json& j);

} // namespace edgeprofiler::detail
