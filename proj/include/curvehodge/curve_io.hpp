#pragma once

#include <filesystem>
#include <string_view>

#include <json.hpp>

#include "curvehodge/curve.hpp"

namespace curvehodge {

/// Reads a curve spec document. The schema is described in docs/curve-spec-format.md; unknown
/// fields and wrongly typed values raise SchemaError naming the field path.
CurveSpec spec_from_json(const nlohmann::json& doc);
CurveSpec parse_spec(std::string_view text);
CurveSpec load_spec(const std::filesystem::path& path);

/// Writes every field explicitly; spec_from_json(spec_to_json(s)) reproduces s.
nlohmann::json spec_to_json(const CurveSpec& spec);

}  // namespace curvehodge
