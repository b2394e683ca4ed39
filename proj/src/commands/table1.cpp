#include <iomanip>
#include <sstream>
#include <vector>

#include "qreflect/commands.hpp"
#include "qreflect/maps.hpp"

namespace qreflect::commands {

namespace {

struct Column {
    const char* label;
    SignMask mask;
};

std::vector<Column> columns() {
    const QubitSet a{0};
    const QubitSet b{1};
    const QubitSet ab{0, 1};
    return {
        {"RT(x)1", mask_partial_transpose(2, a)},
        {"1(x)RT", mask_partial_transpose(2, b)},
        {"RT(x)RT", mask_partial_transpose(2, ab)},
        {"RS(x)1", mask_spin_flip(2, a)},
        {"1(x)RS", mask_spin_flip(2, b)},
        {"RS(x)RS", mask_spin_flip(2, ab)},
        {"RS16", mask_total_reflection(2, ab)},
    };
}

std::string component(int linear) { return std::to_string(linear / 4) + std::to_string(linear % 4); }

}  // namespace

nlohmann::json table1() {
    const auto cols = columns();
    nlohmann::json j;
    nlohmann::json labels = nlohmann::json::array();
    nlohmann::json counts = nlohmann::json::array();
    for (const auto& c : cols) {
        labels.push_back(c.label);
        counts.push_back(classify(c.mask).sign_change_count);
    }
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < 16; ++i) {
        nlohmann::json signs = nlohmann::json::array();
        for (const auto& c : cols) signs.push_back(static_cast<int>(c.mask[i]));
        rows.push_back({{"component", component(i)}, {"signs", std::move(signs)}});
    }
    j["columns"] = std::move(labels);
    j["rows"] = std::move(rows);
    j["sign_changes"] = std::move(counts);
    return j;
}

std::string table1_plain() {
    const auto cols = columns();
    std::ostringstream out;
    out << std::left << std::setw(10) << "rho^jk";
    for (const auto& c : cols) out << std::setw(10) << c.label;
    out << '\n';
    for (int i = 0; i < 16; ++i) {
        out << std::setw(10) << ("rho^" + component(i));
        for (const auto& c : cols) out << std::setw(10) << (c.mask[i] > 0 ? "+" : "-");
        out << '\n';
    }
    out << std::setw(10) << "#changes";
    for (const auto& c : cols) out << std::setw(10) << classify(c.mask).sign_change_count;
    out << '\n';
    return out.str();
}

}  // namespace qreflect::commands
