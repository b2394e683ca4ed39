#pragma once

// Stokes-tensor representation of multiqubit operators.
//
// Basis: lambda_0 = 1/sqrt2, lambda_j = sigma_j/sqrt2, and
// Lambda_{j1...jn} = lambda_{j1} (x) ... (x) lambda_{jn}. This basis is
// orthonormal for the Hilbert-Schmidt inner product, so the Stokes values
// s[idx] = tr(rho Lambda_idx) satisfy rho = sum_idx s[idx] Lambda_idx and
// tr(rho^2) = sum_idx s[idx]^2.
//
// Index conventions used everywhere in the library:
//   * qubit 0 (subsystem A) is the leftmost Kronecker factor, i.e. the most
//     significant bit of a Hilbert-space index;
//   * a MultiIndex (d_0, ..., d_{n-1}) linearizes as sum_m d_m 4^(n-1-m).

#include <cstdint>
#include <span>
#include <vector>

#include "qreflect/linalg.hpp"
#include "qreflect/qubits.hpp"

namespace qreflect {

class MultiIndex {
public:
    explicit MultiIndex(std::vector<int> digits);
    static MultiIndex from_linear(int n, std::int64_t linear);

    int qubits() const { return static_cast<int>(digits_.size()); }
    int operator[](int q) const { return digits_[q]; }
    const std::vector<int>& digits() const { return digits_; }
    std::int64_t linear() const;

private:
    std::vector<int> digits_;
};

/// Hermitian 2^n x 2^n matrix with unit trace. Not necessarily positive.
class HermitianOperator {
public:
    /// Validates shape, Hermiticity and trace within `tol`; stores the
    /// Hermitian part. Throws DimensionError or RepresentationError.
    explicit HermitianOperator(const CMatrix& m, double tol = kHermitianTol);

    int qubits() const { return n_; }
    std::int64_t dim() const { return hilbert_dim(n_); }
    const CMatrix& matrix() const { return m_; }

private:
    int n_;
    CMatrix m_;
};

/// A HermitianOperator whose spectrum is nonnegative (within tolerance).
class DensityState : public HermitianOperator {
public:
    explicit DensityState(const CMatrix& m, double tol = kHermitianTol);
    explicit DensityState(const HermitianOperator& op, double tol = kHermitianTol);
};

class StokesTensor {
public:
    /// Throws InvalidTensorError if the length is not 4^n or the affine
    /// component differs from 2^(-n/2) by more than `tol`.
    StokesTensor(int n, std::vector<double> values, double tol = kHermitianTol);

    int qubits() const { return n_; }
    std::span<const double> values() const { return values_; }
    double operator[](std::int64_t linear) const { return values_[linear]; }
    double operator[](const MultiIndex& idx) const { return values_[idx.linear()]; }

    static double affine_value(int n);

private:
    int n_;
    std::vector<double> values_;
};

/// Real 2^n x 2^n unfolding of a Stokes tensor. One qubit:
/// sigma = sqrt2 [[s0, s2], [s1, s3]], extended multiplicatively.
class RealDensityMatrix {
public:
    RealDensityMatrix(int n, RMatrix entries);

    int qubits() const { return n_; }
    const RMatrix& matrix() const { return m_; }

private:
    int n_;
    RMatrix m_;
};

CMatrix basis_element(const MultiIndex& idx);

StokesTensor to_stokes(const HermitianOperator& rho);
/// Same as above for a raw matrix; throws RepresentationError when the
/// matrix is not Hermitian with unit trace.
StokesTensor to_stokes(const CMatrix& rho, double tol = kHermitianTol);
HermitianOperator from_stokes(const StokesTensor& s);

RealDensityMatrix to_real_density(const StokesTensor& s);
StokesTensor from_real_density(const RealDensityMatrix& sigma);

/// Position in the real density matrix that holds the Stokes value at
/// `linear`: row bit of qubit m is 1 for digits {1,3}, column bit for {2,3}.
std::pair<std::int64_t, std::int64_t> real_density_position(int n, std::int64_t linear);

/// Two-qubit Stokes tensor as a 4x4 matrix with entries 2 s^{jk}
/// (row j = qubit A digit, column k = qubit B digit).
RMatrix stokes_as_matrix(const StokesTensor& s);

/// Realignment of a bipartite (dim_a*dim_b)^2 matrix. The entry at
/// row (a,b), column (c,e) moves to row (e,b), column (c,a), so that
/// choi(X (x) Y) = vec(Y) vec(X)^T with column-stacking vec. For
/// dim_a == dim_b the map is an involution.
CMatrix choi_reshuffle(const CMatrix& m, std::int64_t dim_a, std::int64_t dim_b);
RMatrix choi_reshuffle(const RMatrix& m, std::int64_t dim_a, std::int64_t dim_b);
/// Square case: the side must be d^2 for an integer d.
CMatrix choi_reshuffle(const CMatrix& m);
RMatrix choi_reshuffle(const RMatrix& m);

HermitianOperator tensor_product(const HermitianOperator& a, const HermitianOperator& b);

CMatrix partial_trace(const CMatrix& m, int n, QubitSet keep);
HermitianOperator partial_trace(const HermitianOperator& rho, QubitSet keep);
/// Stokes-domain partial trace: discard components with nonzero digits on
/// traced qubits and rescale by 2^((n-m)/2).
StokesTensor partial_trace(const StokesTensor& s, QubitSet keep);

/// Inverse of partial_trace's layout: identity on the qubits outside
/// `keep`, `reduced` on the qubits in `keep`.
CMatrix embed_with_identity(const CMatrix& reduced, int n, QubitSet keep);

/// 1_traced (x) tr_traced(m), with the identity placed back on the traced
/// qubits. Tracing every qubit gives tr(m) times the identity.
CMatrix replace_with_identity(const CMatrix& m, int n, QubitSet traced);

/// Reorders tensor factors: qubit `order[k]` of the input becomes qubit k.
CMatrix permute_qubits(const CMatrix& m, int n, std::span<const int> order);

double purity(const StokesTensor& s);

}  // namespace qreflect
