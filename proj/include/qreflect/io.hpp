#pragma once

// JSON file formats.
//
// State file:
//   {"n": 2, "format": "hermitian", "re": [[...], ...], "im": [[...], ...]}
//   {"n": 2, "format": "stokes", "values": [...4^n...]}
// `re`/`im` are row-major, either nested rows or one flat array of 4^n numbers.
// `values` follow the base-4 multi-index order. An optional integer `seed`
// records how a fixture was generated.
//
// Mask: {"n": 2, "name": "...", "signs": [1, -1, ...]}.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "qreflect/entanglement.hpp"
#include "qreflect/maps.hpp"
#include "qreflect/repr.hpp"

namespace qreflect {

enum class StateFormat { Hermitian, Stokes };

struct StateFile {
    HermitianOperator op;
    StateFormat format = StateFormat::Hermitian;
    std::optional<std::uint64_t> seed;
};

/// Throws FormatError for malformed JSON or missing fields, DimensionError
/// when array sizes disagree with `n`, RepresentationError for
/// non-Hermitian or non-unit-trace content.
StateFile parse_state(const nlohmann::json& j);
StateFile read_state_file(const std::filesystem::path& path);

nlohmann::json state_to_json(const HermitianOperator& op, StateFormat format,
                             std::optional<std::uint64_t> seed = std::nullopt);
void write_state_file(const std::filesystem::path& path, const HermitianOperator& op,
                      StateFormat format, std::optional<std::uint64_t> seed = std::nullopt);

nlohmann::json mask_to_json(const SignMask& mask);
SignMask mask_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const CriterionReport& report);
nlohmann::json feasibility_to_json(const FeasibilityReport& report);

}  // namespace qreflect
