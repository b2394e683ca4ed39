#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace qreflect {

/// Set of qubit positions, 0-based. Position 0 is the leftmost tensor factor
/// (subsystem A), position 1 is B, and so on.
class QubitSet {
public:
    constexpr QubitSet() = default;
    QubitSet(std::initializer_list<int> qubits);

    static QubitSet from_mask(std::uint32_t mask) {
        QubitSet s;
        s.mask_ = mask;
        return s;
    }
    static QubitSet all(int n) { return from_mask(n >= 32 ? ~0u : (1u << n) - 1u); }

    /// Parses "A", "AC", "1,3" (1-based) or "" into a set. Throws ArgumentError.
    static QubitSet parse(std::string_view text);

    std::uint32_t mask() const { return mask_; }
    bool contains(int q) const { return (mask_ >> q) & 1u; }
    int size() const { return std::popcount(mask_); }
    bool empty() const { return mask_ == 0; }
    QubitSet complement(int n) const { return from_mask(all(n).mask_ & ~mask_); }
    bool fits(int n) const { return (mask_ & ~all(n).mask_) == 0; }
    std::vector<int> members() const;

    /// Letter form, "AB" for {0,1}.
    std::string label() const;

    friend bool operator==(QubitSet, QubitSet) = default;

private:
    std::uint32_t mask_ = 0;
};

}  // namespace qreflect
