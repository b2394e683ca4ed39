#include "qreflect/kernels.hpp"

#include <bit>
#include <cmath>

#include <omp.h>

namespace qreflect::kernels {

namespace {

struct PauliMasks {
    std::uint32_t x = 0;      // qubits carrying X or Y
    std::uint32_t phase = 0;  // qubits carrying Y or Z
    int ny = 0;
};

inline PauliMasks masks_of(std::int64_t linear, int n) {
    PauliMasks m;
    for (int q = 0; q < n; ++q) {
        const int digit = static_cast<int>((linear >> (2 * (n - 1 - q))) & 3);
        const std::uint32_t bit = 1u << (n - 1 - q);
        if (digit == 1 || digit == 2) m.x |= bit;
        if (digit == 2 || digit == 3) m.phase |= bit;
        if (digit == 2) ++m.ny;
    }
    return m;
}

// i^k
inline Complex i_power(int k) {
    switch (k & 3) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

// tr(rho P) = sum_c phase(c) rho(c, c ^ x).
inline double expectation(const CMatrix& rho, std::int64_t linear, int n) {
    const PauliMasks m = masks_of(linear, n);
    const std::uint32_t dim = 1u << n;
    Complex acc{0.0, 0.0};
    for (std::uint32_t c = 0; c < dim; ++c) {
        const Complex v = rho(c, c ^ m.x);
        if (std::popcount(c & m.phase) & 1) {
            acc -= v;
        } else {
            acc += v;
        }
    }
    return (i_power(m.ny) * acc).real();
}

// Column c of sum_idx values[idx] P_idx. Entry (r, c) collects the 2^n
// strings with x = r ^ c; t selects Z (outside x) or Y (inside x).
inline void synthesize_column(std::span<const double> values, int n, std::uint32_t c, CMatrix& rho) {
    const std::uint32_t dim = 1u << n;
    for (std::uint32_t r = 0; r < dim; ++r) {
        const std::uint32_t x = r ^ c;
        Complex acc{0.0, 0.0};
        for (std::uint32_t t = 0; t < dim; ++t) {
            std::int64_t linear = 0;
            for (int q = 0; q < n; ++q) {
                const std::uint32_t bit = 1u << (n - 1 - q);
                const int digit = (x & bit) ? ((t & bit) ? 2 : 1) : ((t & bit) ? 3 : 0);
                linear = linear * 4 + digit;
            }
            const double v = values[linear];
            if (v == 0.0) continue;
            const int ny = std::popcount(x & t);
            const double sign = (std::popcount(c & t) & 1) ? -1.0 : 1.0;
            acc += sign * v * i_power(ny);
        }
        rho(r, c) = acc;
    }
}

inline double basis_scale(int n) { return std::pow(2.0, -0.5 * n); }

}  // namespace

void pauli_expectations(const CMatrix& rho, int n, std::span<double> out) {
    const std::int64_t count = std::int64_t{1} << (2 * n);
    const double scale = basis_scale(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t idx = 0; idx < count; ++idx) {
        out[idx] = scale * expectation(rho, idx, n);
    }
}

void pauli_synthesis(std::span<const double> values, int n, CMatrix& rho) {
    const std::int64_t dim = std::int64_t{1} << n;
    rho.resize(dim, dim);
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < dim; ++c) {
        synthesize_column(values, n, static_cast<std::uint32_t>(c), rho);
    }
    rho *= basis_scale(n);
}

void apply_signs(std::span<const double> in, std::span<const std::int8_t> signs, std::span<double> out) {
    const std::int64_t count = static_cast<std::int64_t>(in.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        out[i] = signs[i] * in[i];
    }
}

int max_threads() { return omp_get_max_threads(); }

namespace serial {

void pauli_expectations(const CMatrix& rho, int n, std::span<double> out) {
    const std::int64_t count = std::int64_t{1} << (2 * n);
    const double scale = basis_scale(n);
    for (std::int64_t idx = 0; idx < count; ++idx) {
        out[idx] = scale * expectation(rho, idx, n);
    }
}

void pauli_synthesis(std::span<const double> values, int n, CMatrix& rho) {
    const std::int64_t dim = std::int64_t{1} << n;
    rho.resize(dim, dim);
    for (std::int64_t c = 0; c < dim; ++c) {
        synthesize_column(values, n, static_cast<std::uint32_t>(c), rho);
    }
    rho *= basis_scale(n);
}

void apply_signs(std::span<const double> in, std::span<const std::int8_t> signs, std::span<double> out) {
    for (std::size_t i = 0; i < in.size(); ++i) {
        out[i] = signs[i] * in[i];
    }
}

}  // namespace serial

}  // namespace qreflect::kernels
