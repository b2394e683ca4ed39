#pragma once

// Report builders behind the `qreflect` command-line tool. Each returns the
// structured result payload; the tool wraps it with command echo, input
// digest and wall time.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qreflect/io.hpp"
#include "qreflect/linalg.hpp"
#include "qreflect/qubits.hpp"

namespace qreflect::commands {

/// PSD tolerance: QREFLECT_TOL if set and valid, otherwise kPsdTol.
/// Throws ArgumentError for an unparsable or negative value.
double tolerance_from_env();

/// FNV-1a 64-bit digest as 16 hex digits.
std::string digest(std::string_view bytes);

nlohmann::json wrap_report(const std::string& command, const std::string& input_digest, nlohmann::json result,
                           std::optional<double> wall_ms);

// -- table1 -----------------------------------------------------------------

nlohmann::json table1();
/// Aligned-text rendering of the same table.
std::string table1_plain();

// -- analyze ----------------------------------------------------------------

struct AnalyzeRequest {
    std::optional<QubitSet> ppt;
    bool ccn = false;
    bool concurrence = false;
    std::optional<QubitSet> reflect;
    bool feasible = false;
    std::optional<QubitSet> reduction;
};

/// Throws DimensionError when a requested criterion does not fit the
/// state's qubit count.
nlohmann::json analyze(const StateFile& state, const AnalyzeRequest& request, double tol);

// -- upb-demo ---------------------------------------------------------------

nlohmann::json upb_demo(double tol);

// -- prop -------------------------------------------------------------------

enum class Fault { None, MaskSign };
enum class Execution { Parallel, Serial };

struct PropertyOptions {
    std::uint64_t seed = 42;
    int trials = 500;
    Fault fault = Fault::None;
    Execution execution = Execution::Parallel;
};

struct PropertyResult {
    bool passed;
    nlohmann::json report;
};

/// Runs every randomized invariant for `trials` trials. Trials run in
/// parallel; results are merged in trial order, so the report does not
/// depend on the thread count.
PropertyResult property_suite(const PropertyOptions& options);

}  // namespace qreflect::commands
