#pragma once

// Data-parallel kernels behind the Stokes conversions and sign masks.
//
// Every Pauli string P = sigma_{d0} (x) ... (x) sigma_{d(n-1)} is a monomial
// matrix: P|c> = phase(c) |c ^ x> where x marks the qubits carrying X or Y.
// Both conversions therefore cost O(8^n) instead of the O(16^n) of dense
// trace products.
//
// The `kernels` functions are OpenMP-parallel. `kernels::serial` holds the
// same loops without threading; tests compare the two and the benchmark
// target times them.

#include <cstdint>
#include <span>

#include "qreflect/linalg.hpp"

namespace qreflect::kernels {

/// out[idx] = Re tr(rho Lambda_idx) for all 4^n multi-indices.
void pauli_expectations(const CMatrix& rho, int n, std::span<double> out);

/// rho = sum_idx values[idx] Lambda_idx; `rho` is resized to 2^n x 2^n.
void pauli_synthesis(std::span<const double> values, int n, CMatrix& rho);

/// out[i] = signs[i] * in[i].
void apply_signs(std::span<const double> in, std::span<const std::int8_t> signs,
                 std::span<double> out);

int max_threads();

namespace serial {

void pauli_expectations(const CMatrix& rho, int n, std::span<double> out);
void pauli_synthesis(std::span<const double> values, int n, CMatrix& rho);
void apply_signs(std::span<const double> in, std::span<const std::int8_t> signs,
                 std::span<double> out);

}  // namespace serial

}  // namespace qreflect::kernels
