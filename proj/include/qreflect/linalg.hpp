#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace qreflect {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using CVector = Eigen::VectorXcd;

inline constexpr int kMaxQubits = 6;
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;

constexpr std::int64_t hilbert_dim(int n) { return std::int64_t{1} << n; }
constexpr std::int64_t stokes_size(int n) { return std::int64_t{1} << (2 * n); }

// Kronecker product, left factor is the most significant index.
CMatrix kron(const CMatrix& a, const CMatrix& b);
RMatrix kron(const RMatrix& a, const RMatrix& b);

bool is_hermitian(const CMatrix& m, double tol = kHermitianTol);
CMatrix hermitian_part(const CMatrix& m);

// Hilbert-Schmidt inner product tr(a^dagger b).
Complex hs_inner(const CMatrix& a, const CMatrix& b);

// Number of qubits for a square matrix of side 2^n; -1 if the side is not a power of two.
int qubits_for_dim(std::int64_t dim);

}  // namespace qreflect
