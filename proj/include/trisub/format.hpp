#pragma once

#include <string>

#include <json.hpp>

namespace trisub {

/// Fixed textual form for reals: 17 significant digits ("%.17g"); NaN and
/// infinities become "null" so the output stays valid JSON.
[[nodiscard]] std::string format_real(double v);

/// Serializes `j` compactly, writing every floating-point value through
/// format_real. Object keys keep the json object's (sorted) order, so equal
/// values always produce identical bytes.
[[nodiscard]] std::string dump_json(const nlohmann::json& j);

}  // namespace trisub
