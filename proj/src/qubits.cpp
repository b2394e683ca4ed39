#include "qreflect/qubits.hpp"

#include <cctype>

#include "qreflect/errors.hpp"

namespace qreflect {

QubitSet::QubitSet(std::initializer_list<int> qubits) {
    for (int q : qubits) {
        if (q < 0 || q >= 32) throw ArgumentError("qubit position out of range: " + std::to_string(q));
        mask_ |= 1u << q;
    }
}

QubitSet QubitSet::parse(std::string_view text) {
    QubitSet s;
    bool digits = false;
    bool letters = false;
    int pending = -1;
    auto flush = [&] {
        if (pending < 0) return;
        if (pending < 1 || pending > 32) throw ArgumentError("qubit number out of range in '" + std::string(text) + "'");
        s.mask_ |= 1u << (pending - 1);
        pending = -1;
    };
    for (char ch : text) {
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits = true;
            pending = (pending < 0 ? 0 : pending * 10) + (ch - '0');
        } else if (ch == ',' || ch == ' ') {
            flush();
        } else if (std::isalpha(static_cast<unsigned char>(ch))) {
            letters = true;
            const int q = std::toupper(static_cast<unsigned char>(ch)) - 'A';
            if (q >= 26) throw ArgumentError("bad qubit label in '" + std::string(text) + "'");
            s.mask_ |= 1u << q;
        } else {
            throw ArgumentError("bad qubit subset '" + std::string(text) + "'");
        }
    }
    flush();
    if (digits && letters) throw ArgumentError("mixed letters and numbers in qubit subset '" + std::string(text) + "'");
    return s;
}

std::vector<int> QubitSet::members() const {
    std::vector<int> out;
    for (int q = 0; q < 32; ++q) {
        if (contains(q)) out.push_back(q);
    }
    return out;
}

std::string QubitSet::label() const {
    std::string out;
    for (int q : members()) out.push_back(static_cast<char>('A' + q));
    return out;
}

}  // namespace qreflect
