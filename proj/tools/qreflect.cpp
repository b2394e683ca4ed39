#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qreflect/commands.hpp"
#include "qreflect/errors.hpp"

namespace cmd = qreflect::commands;

namespace {

enum Exit { kOk = 0, kInvariantFailure = 1, kBadInput = 2, kDimension = 3, kUsage = 64 };

std::string read_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw qreflect::FormatError("cannot open state file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::optional<qreflect::QubitSet> subset_option(const std::string& text, bool given) {
    if (!given) return std::nullopt;
    return qreflect::QubitSet::parse(text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stokes-tensor reflections and entanglement criteria for qubit states"};
    app.require_subcommand(1);
    bool no_timing = false;
    app.add_flag("--no-timing", no_timing, "Omit wall time so reports are byte-identical across runs");

    auto* table1 = app.add_subcommand("table1", "Sign table of the one- and two-qubit masks");
    bool plain = false;
    table1->add_flag("--plain", plain, "Aligned-text table instead of JSON");

    auto* analyze = app.add_subcommand("analyze", "Run criteria on a state file");
    std::string file, ppt, reflect, reduction;
    cmd::AnalyzeRequest request;
    analyze->add_option("file", file, "State file (JSON)")->required();
    auto* ppt_opt = analyze->add_option("--ppt", ppt, "Partial-transpose test on a qubit subset, e.g. A or 1,3");
    analyze->add_flag("--ccn", request.ccn, "Computable cross-norm across the leading half of the qubits");
    analyze->add_flag("--concurrence", request.concurrence, "Two-qubit concurrence");
    auto* reflect_opt = analyze->add_option("--reflect", reflect, "Reflect the given qubits and test positivity");
    analyze->add_flag("--feasible", request.feasible, "Total-reflection feasibility flags");
    auto* reduction_opt = analyze->add_option("--reduction", reduction, "Reduction criterion, tracing out the subset");

    auto* upb = app.add_subcommand("upb-demo", "Reflect the UPB separable mixture into a bound entangled state");

    auto* prop = app.add_subcommand("prop", "Randomized invariant suite");
    cmd::PropertyOptions options;
    std::string fault;
    bool serial = false;
    prop->add_option("--seed", options.seed, "Base seed")->capture_default_str();
    prop->add_option("--trials", options.trials, "Trials per invariant")->capture_default_str()->check(CLI::PositiveNumber);
    prop->add_option("--inject-fault", fault, "Negative control: corrupt a mask sign")->check(CLI::IsMember({"mask-sign"}));
    prop->add_flag("--serial", serial, "Run trials on one thread");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    auto finish = [&](const std::string& command, const std::string& input, nlohmann::json result) {
        std::optional<double> wall;
        if (!no_timing) {
            wall = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        }
        std::cout << cmd::wrap_report(command, cmd::digest(input), std::move(result), wall).dump(2) << '\n';
    };

    try {
        const double tol = cmd::tolerance_from_env();
        if (*table1) {
            if (plain) {
                std::cout << cmd::table1_plain();
                return kOk;
            }
            finish("table1", "table1", cmd::table1());
            return kOk;
        }
        if (*analyze) {
            request.ppt = subset_option(ppt, ppt_opt->count() > 0);
            request.reflect = subset_option(reflect, reflect_opt->count() > 0);
            request.reduction = subset_option(reduction, reduction_opt->count() > 0);
            const std::string bytes = read_bytes(file);
            nlohmann::json parsed;
            try {
                parsed = nlohmann::json::parse(bytes);
            } catch (const nlohmann::json::exception& e) {
                throw qreflect::FormatError("malformed JSON in " + file + ": " + e.what());
            }
            const qreflect::StateFile state = qreflect::parse_state(parsed);
            finish("analyze " + file, bytes, cmd::analyze(state, request, tol));
            return kOk;
        }
        if (*upb) {
            finish("upb-demo", "upb-demo", cmd::upb_demo(tol));
            return kOk;
        }
        if (*prop) {
            if (fault == "mask-sign") options.fault = cmd::Fault::MaskSign;
            if (serial) options.execution = cmd::Execution::Serial;
            const auto result = cmd::property_suite(options);
            const std::string echo = "prop --seed " + std::to_string(options.seed) + " --trials " +
                                     std::to_string(options.trials) + (fault.empty() ? "" : " --inject-fault " + fault);
            finish(echo, echo, result.report);
            if (!result.passed) {
                std::cerr << "invariant failure; counterexample:\n" << result.report["counterexample"].dump(2) << '\n';
                return kInvariantFailure;
            }
            return kOk;
        }
    } catch (const qreflect::DimensionError& e) {
        std::cerr << "dimension mismatch: " << e.what() << '\n';
        return kDimension;
    } catch (const qreflect::FormatError& e) {
        std::cerr << "malformed input: " << e.what() << '\n';
        return kBadInput;
    } catch (const qreflect::RepresentationError& e) {
        std::cerr << "invalid state: " << e.what() << '\n';
        return kBadInput;
    } catch (const qreflect::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    }
    return kUsage;
}
