#include "qreflect/io.hpp"

#include <fstream>
#include <sstream>

#include "qreflect/errors.hpp"

namespace qreflect {

using nlohmann::json;

namespace {

// Accepts nested rows or one flat row-major array.
std::vector<double> flatten_matrix(const json& j, std::int64_t dim, const char* field) {
    if (!j.is_array()) throw FormatError(std::string("field '") + field + "' must be an array");
    std::vector<double> out;
    out.reserve(dim * dim);
    if (!j.empty() && j.front().is_array()) {
        if (static_cast<std::int64_t>(j.size()) != dim) {
            throw DimensionError(std::string("field '") + field + "' needs " + std::to_string(dim) + " rows");
        }
        for (const auto& row : j) {
            if (!row.is_array()) throw FormatError(std::string("field '") + field + "' mixes rows and numbers");
            if (static_cast<std::int64_t>(row.size()) != dim) {
                throw DimensionError(std::string("row of '") + field + "' needs " + std::to_string(dim) + " entries");
            }
            for (const auto& v : row) {
                if (!v.is_number()) throw FormatError(std::string("non-numeric entry in '") + field + "'");
                out.push_back(v.get<double>());
            }
        }
    } else {
        if (static_cast<std::int64_t>(j.size()) != dim * dim) {
            throw DimensionError(std::string("field '") + field + "' needs " + std::to_string(dim * dim) + " entries");
        }
        for (const auto& v : j) {
            if (!v.is_number()) throw FormatError(std::string("non-numeric entry in '") + field + "'");
            out.push_back(v.get<double>());
        }
    }
    return out;
}

json matrix_rows(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

StateFile parse_state(const json& j) {
    if (!j.is_object()) throw FormatError("state file must hold a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer()) throw FormatError("state file needs an integer field 'n'");
    if (!j.contains("format") || !j["format"].is_string()) throw FormatError("state file needs a string field 'format'");
    const int n = j["n"].get<int>();
    if (n < 1 || n > kMaxQubits) throw DimensionError("state qubit count " + std::to_string(n) + " outside [1, 6]");

    std::optional<std::uint64_t> seed;
    if (j.contains("seed")) {
        if (!j["seed"].is_number_integer()) throw FormatError("field 'seed' must be an integer");
        seed = j["seed"].get<std::uint64_t>();
    }

    const std::string format = j["format"].get<std::string>();
    if (format == "hermitian") {
        if (!j.contains("re")) throw FormatError("hermitian state needs field 're'");
        const auto dim = hilbert_dim(n);
        const std::vector<double> re = flatten_matrix(j["re"], dim, "re");
        const std::vector<double> im = j.contains("im") ? flatten_matrix(j["im"], dim, "im") : std::vector<double>(dim * dim, 0.0);
        CMatrix m(dim, dim);
        for (std::int64_t r = 0; r < dim; ++r)
            for (std::int64_t c = 0; c < dim; ++c) m(r, c) = Complex{re[r * dim + c], im[r * dim + c]};
        return {HermitianOperator(m), StateFormat::Hermitian, seed};
    }
    if (format == "stokes") {
        if (!j.contains("values") || !j["values"].is_array()) throw FormatError("stokes state needs array field 'values'");
        const auto& arr = j["values"];
        if (static_cast<std::int64_t>(arr.size()) != stokes_size(n)) {
            throw DimensionError("stokes state needs " + std::to_string(stokes_size(n)) + " values");
        }
        std::vector<double> values;
        for (const auto& v : arr) {
            if (!v.is_number()) throw FormatError("non-numeric entry in 'values'");
            values.push_back(v.get<double>());
        }
        try {
            return {from_stokes(StokesTensor(n, std::move(values))), StateFormat::Stokes, seed};
        } catch (const InvalidTensorError& e) {
            throw RepresentationError(e.what());
        }
    }
    throw FormatError("unknown state format '" + format + "'");
}

StateFile read_state_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open state file " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw FormatError("malformed JSON in " + path.string() + ": " + e.what());
    }
    return parse_state(j);
}

json state_to_json(const HermitianOperator& op, StateFormat format, std::optional<std::uint64_t> seed) {
    json j;
    j["n"] = op.qubits();
    if (format == StateFormat::Hermitian) {
        j["format"] = "hermitian";
        j["re"] = matrix_rows(op.matrix().real());
        j["im"] = matrix_rows(op.matrix().imag());
    } else {
        j["format"] = "stokes";
        const StokesTensor s = to_stokes(op);
        j["values"] = std::vector<double>(s.values().begin(), s.values().end());
    }
    if (seed) j["seed"] = *seed;
    return j;
}

void write_state_file(const std::filesystem::path& path, const HermitianOperator& op, StateFormat format,
                      std::optional<std::uint64_t> seed) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path.string());
    out << state_to_json(op, format, seed).dump(2) << '\n';
}

json mask_to_json(const SignMask& mask) {
    json j;
    j["n"] = mask.qubits();
    j["name"] = mask.name();
    json signs = json::array();
    for (auto s : mask.signs()) signs.push_back(static_cast<int>(s));
    j["signs"] = std::move(signs);
    return j;
}

SignMask mask_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("signs") || !j["signs"].is_array()) {
        throw FormatError("mask needs fields 'n' and 'signs'");
    }
    std::vector<std::int8_t> signs;
    for (const auto& v : j["signs"]) {
        if (!v.is_number_integer()) throw FormatError("mask signs must be integers");
        signs.push_back(static_cast<std::int8_t>(v.get<int>()));
    }
    try {
        return SignMask(j["n"].get<int>(), std::move(signs), j.value("name", std::string("mask")));
    } catch (const ArgumentError& e) {
        throw FormatError(e.what());
    }
}

json report_to_json(const CriterionReport& report) {
    json j;
    j["criterion"] = report.criterion;
    j["verdict"] = std::string(to_string(report.verdict));
    j["witness"] = report.witness;
    j["subset"] = report.subset.label();
    j["tolerance"] = report.tolerance;
    if (!report.details.empty()) {
        json details = json::object();
        for (const auto& [key, value] : report.details) details[key] = value;
        j["details"] = std::move(details);
    }
    return j;
}

json feasibility_to_json(const FeasibilityReport& report) {
    json j = report_to_json(report.report);
    json flags;
    flags["sufficient"] = report.sufficient;
    flags["exact"] = report.exact;
    flags["purity_bound"] = report.purity_bound;
    flags["rank_bound"] = report.rank_bound;
    j["flags"] = std::move(flags);
    return j;
}

}  // namespace qreflect
