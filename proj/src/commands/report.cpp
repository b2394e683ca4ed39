#include <cstdlib>
#include <cstdio>

#include "qreflect/commands.hpp"
#include "qreflect/errors.hpp"

namespace qreflect::commands {

double tolerance_from_env() {
    const char* raw = std::getenv("QREFLECT_TOL");
    if (raw == nullptr || *raw == '\0') return kPsdTol;
    char* end = nullptr;
    const double tol = std::strtod(raw, &end);
    if (end == raw || *end != '\0' || !(tol >= 0.0)) {
        throw ArgumentError(std::string("QREFLECT_TOL is not a nonnegative number: ") + raw);
    }
    return tol;
}

std::string digest(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

nlohmann::json wrap_report(const std::string& command, const std::string& input_digest, nlohmann::json result,
                           std::optional<double> wall_ms) {
    nlohmann::json j;
    j["command"] = command;
    j["input_digest"] = input_digest;
    j["result"] = std::move(result);
    if (wall_ms) j["wall_time_ms"] = *wall_ms;
    return j;
}

}  // namespace qreflect::commands
