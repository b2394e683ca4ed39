#include "qreflect/repr.hpp"

#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "qreflect/errors.hpp"
#include "qreflect/kernels.hpp"

namespace qreflect {

namespace {

void check_qubit_count(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw DimensionError("qubit count " + std::to_string(n) + " outside [1, " + std::to_string(kMaxQubits) + "]");
    }
}

int qubits_of_square(const CMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("operator matrix is not square");
    const int n = qubits_for_dim(m.rows());
    if (n < 0) throw DimensionError("operator side " + std::to_string(m.rows()) + " is not a power of two");
    check_qubit_count(n);
    return n;
}

const std::array<Eigen::Matrix2cd, 4>& scaled_paulis() {
    static const std::array<Eigen::Matrix2cd, 4> lambdas = [] {
        const double s = 1.0 / std::sqrt(2.0);
        const Complex i{0.0, 1.0};
        std::array<Eigen::Matrix2cd, 4> l;
        l[0] << s, 0, 0, s;
        l[1] << 0, s, s, 0;
        l[2] << 0, -i * s, i * s, 0;
        l[3] << s, 0, 0, -s;
        return l;
    }();
    return lambdas;
}

// Splits a full Hilbert index into (kept bits, traced bits) packed in qubit order.
struct IndexSplit {
    std::vector<int> kept;    // bit positions of kept qubits, most significant first
    std::vector<int> traced;
};

IndexSplit split_for(int n, QubitSet keep) {
    IndexSplit s;
    for (int q = 0; q < n; ++q) {
        (keep.contains(q) ? s.kept : s.traced).push_back(n - 1 - q);
    }
    return s;
}

std::int64_t scatter(std::int64_t packed, const std::vector<int>& positions) {
    std::int64_t full = 0;
    const int k = static_cast<int>(positions.size());
    for (int i = 0; i < k; ++i) {
        if ((packed >> (k - 1 - i)) & 1) full |= std::int64_t{1} << positions[i];
    }
    return full;
}

template <typename M>
M choi_impl(const M& m, std::int64_t dim_a, std::int64_t dim_b) {
    if (dim_a < 1 || dim_b < 1 || m.rows() != dim_a * dim_b || m.cols() != dim_a * dim_b) {
        throw DimensionError("realignment needs a square matrix of side dim_a*dim_b");
    }
    // row (a,b), col (c,e) -> row (e,b), col (c,a)
    M out(dim_b * dim_b, dim_a * dim_a);
    for (std::int64_t a = 0; a < dim_a; ++a)
        for (std::int64_t b = 0; b < dim_b; ++b)
            for (std::int64_t c = 0; c < dim_a; ++c)
                for (std::int64_t e = 0; e < dim_b; ++e)
                    out(e * dim_b + b, c * dim_a + a) = m(a * dim_b + b, c * dim_b + e);
    return out;
}

std::int64_t square_root_side(std::int64_t side) {
    const auto d = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(side))));
    if (d * d != side) throw DimensionError("matrix side " + std::to_string(side) + " is not a perfect square");
    return d;
}

}  // namespace

// ---------------------------------------------------------------------------

MultiIndex::MultiIndex(std::vector<int> digits) : digits_(std::move(digits)) {
    if (digits_.empty()) throw ArgumentError("empty multi-index");
    for (int d : digits_) {
        if (d < 0 || d > 3) throw ArgumentError("multi-index digit " + std::to_string(d) + " not in {0,1,2,3}");
    }
}

MultiIndex MultiIndex::from_linear(int n, std::int64_t linear) {
    if (n < 1 || linear < 0 || linear >= stokes_size(n)) throw ArgumentError("linear index out of range");
    std::vector<int> digits(n);
    for (int q = n - 1; q >= 0; --q) {
        digits[q] = static_cast<int>(linear & 3);
        linear >>= 2;
    }
    return MultiIndex(std::move(digits));
}

std::int64_t MultiIndex::linear() const {
    std::int64_t out = 0;
    for (int d : digits_) out = out * 4 + d;
    return out;
}

HermitianOperator::HermitianOperator(const CMatrix& m, double tol) : n_(qubits_of_square(m)) {
    if (!is_hermitian(m, tol)) throw RepresentationError("operator is not Hermitian");
    const Complex tr = m.trace();
    if (std::abs(tr - Complex{1.0, 0.0}) > tol) {
        throw RepresentationError("operator trace " + std::to_string(tr.real()) + " differs from 1");
    }
    m_ = hermitian_part(m);
}

DensityState::DensityState(const CMatrix& m, double tol) : DensityState(HermitianOperator(m, tol), tol) {}

DensityState::DensityState(const HermitianOperator& op, double tol) : HermitianOperator(op) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(matrix(), Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -tol) {
        throw RepresentationError("operator has a negative eigenvalue " + std::to_string(solver.eigenvalues().minCoeff()));
    }
}

double StokesTensor::affine_value(int n) { return std::pow(2.0, -0.5 * n); }

StokesTensor::StokesTensor(int n, std::vector<double> values, double tol) : n_(n), values_(std::move(values)) {
    check_qubit_count(n);
    if (static_cast<std::int64_t>(values_.size()) != stokes_size(n)) {
        throw InvalidTensorError("Stokes tensor for " + std::to_string(n) + " qubits needs " +
                                 std::to_string(stokes_size(n)) + " values");
    }
    if (std::abs(values_[0] - affine_value(n)) > tol) {
        throw InvalidTensorError("affine component " + std::to_string(values_[0]) + " differs from 2^(-n/2)");
    }
    values_[0] = affine_value(n);
}

RealDensityMatrix::RealDensityMatrix(int n, RMatrix entries) : n_(n), m_(std::move(entries)) {
    check_qubit_count(n);
    if (m_.rows() != hilbert_dim(n) || m_.cols() != hilbert_dim(n)) {
        throw DimensionError("real density matrix must be 2^n x 2^n");
    }
}

// ---------------------------------------------------------------------------

CMatrix basis_element(const MultiIndex& idx) {
    const auto& lambdas = scaled_paulis();
    CMatrix out = lambdas[idx[0]];
    for (int q = 1; q < idx.qubits(); ++q) out = kron(out, CMatrix(lambdas[idx[q]]));
    return out;
}

StokesTensor to_stokes(const HermitianOperator& rho) {
    const int n = rho.qubits();
    std::vector<double> values(stokes_size(n));
    kernels::pauli_expectations(rho.matrix(), n, values);
    values[0] = StokesTensor::affine_value(n);
    return StokesTensor(n, std::move(values));
}

StokesTensor to_stokes(const CMatrix& rho, double tol) { return to_stokes(HermitianOperator(rho, tol)); }

HermitianOperator from_stokes(const StokesTensor& s) {
    CMatrix rho;
    kernels::pauli_synthesis(s.values(), s.qubits(), rho);
    return HermitianOperator(rho);
}

std::pair<std::int64_t, std::int64_t> real_density_position(int n, std::int64_t linear) {
    std::int64_t row = 0;
    std::int64_t col = 0;
    for (int q = 0; q < n; ++q) {
        const int digit = static_cast<int>((linear >> (2 * (n - 1 - q))) & 3);
        row = row * 2 + (digit & 1);
        col = col * 2 + (digit >> 1);
    }
    return {row, col};
}

RealDensityMatrix to_real_density(const StokesTensor& s) {
    const int n = s.qubits();
    const double scale = std::pow(2.0, 0.5 * n);
    RMatrix sigma = RMatrix::Zero(hilbert_dim(n), hilbert_dim(n));
    for (std::int64_t i = 0; i < stokes_size(n); ++i) {
        const auto [r, c] = real_density_position(n, i);
        sigma(r, c) = scale * s[i];
    }
    return RealDensityMatrix(n, std::move(sigma));
}

StokesTensor from_real_density(const RealDensityMatrix& sigma) {
    const int n = sigma.qubits();
    const double scale = std::pow(2.0, -0.5 * n);
    std::vector<double> values(stokes_size(n));
    for (std::int64_t i = 0; i < stokes_size(n); ++i) {
        const auto [r, c] = real_density_position(n, i);
        values[i] = scale * sigma.matrix()(r, c);
    }
    return StokesTensor(n, std::move(values));
}

RMatrix stokes_as_matrix(const StokesTensor& s) {
    if (s.qubits() != 2) throw DimensionError("stokes_as_matrix needs a two-qubit tensor");
    RMatrix out(4, 4);
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) out(j, k) = 2.0 * s[4 * j + k];
    return out;
}

CMatrix choi_reshuffle(const CMatrix& m, std::int64_t dim_a, std::int64_t dim_b) { return choi_impl(m, dim_a, dim_b); }
RMatrix choi_reshuffle(const RMatrix& m, std::int64_t dim_a, std::int64_t dim_b) { return choi_impl(m, dim_a, dim_b); }

CMatrix choi_reshuffle(const CMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("realignment needs a square matrix");
    const auto d = square_root_side(m.rows());
    return choi_impl(m, d, d);
}

RMatrix choi_reshuffle(const RMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("realignment needs a square matrix");
    const auto d = square_root_side(m.rows());
    return choi_impl(m, d, d);
}

HermitianOperator tensor_product(const HermitianOperator& a, const HermitianOperator& b) {
    return HermitianOperator(kron(a.matrix(), b.matrix()));
}

CMatrix partial_trace(const CMatrix& m, int n, QubitSet keep) {
    if (keep.empty()) throw ArgumentError("partial trace must keep at least one qubit");
    if (!keep.fits(n)) throw DimensionError("kept qubits outside the operator");
    const IndexSplit split = split_for(n, keep);
    const std::int64_t kept_dim = std::int64_t{1} << split.kept.size();
    const std::int64_t traced_dim = std::int64_t{1} << split.traced.size();
    CMatrix out = CMatrix::Zero(kept_dim, kept_dim);
    for (std::int64_t i = 0; i < kept_dim; ++i) {
        const std::int64_t fi = scatter(i, split.kept);
        for (std::int64_t j = 0; j < kept_dim; ++j) {
            const std::int64_t fj = scatter(j, split.kept);
            Complex acc{0.0, 0.0};
            for (std::int64_t t = 0; t < traced_dim; ++t) {
                const std::int64_t ft = scatter(t, split.traced);
                acc += m(fi | ft, fj | ft);
            }
            out(i, j) = acc;
        }
    }
    return out;
}

HermitianOperator partial_trace(const HermitianOperator& rho, QubitSet keep) {
    return HermitianOperator(partial_trace(rho.matrix(), rho.qubits(), keep));
}

StokesTensor partial_trace(const StokesTensor& s, QubitSet keep) {
    const int n = s.qubits();
    if (keep.empty()) throw ArgumentError("partial trace must keep at least one qubit");
    if (!keep.fits(n)) throw DimensionError("kept qubits outside the tensor");
    const int m = keep.size();
    const double scale = std::pow(2.0, 0.5 * (n - m));
    std::vector<double> values(stokes_size(m));
    for (std::int64_t i = 0; i < stokes_size(n); ++i) {
        const MultiIndex idx = MultiIndex::from_linear(n, i);
        bool traced_zero = true;
        std::int64_t reduced = 0;
        for (int q = 0; q < n; ++q) {
            if (keep.contains(q)) {
                reduced = reduced * 4 + idx[q];
            } else if (idx[q] != 0) {
                traced_zero = false;
                break;
            }
        }
        if (traced_zero) values[reduced] = scale * s[i];
    }
    return StokesTensor(m, std::move(values));
}

CMatrix embed_with_identity(const CMatrix& reduced, int n, QubitSet keep) {
    if (!keep.fits(n)) throw DimensionError("kept qubits outside the operator");
    const IndexSplit split = split_for(n, keep);
    const std::int64_t kept_dim = std::int64_t{1} << split.kept.size();
    const std::int64_t traced_dim = std::int64_t{1} << split.traced.size();
    if (reduced.rows() != kept_dim || reduced.cols() != kept_dim) throw DimensionError("reduced operator has the wrong size");
    CMatrix out = CMatrix::Zero(hilbert_dim(n), hilbert_dim(n));
    for (std::int64_t t = 0; t < traced_dim; ++t) {
        const std::int64_t ft = scatter(t, split.traced);
        for (std::int64_t i = 0; i < kept_dim; ++i)
            for (std::int64_t j = 0; j < kept_dim; ++j)
                out(scatter(i, split.kept) | ft, scatter(j, split.kept) | ft) = reduced(i, j);
    }
    return out;
}

CMatrix replace_with_identity(const CMatrix& m, int n, QubitSet traced) {
    if (!traced.fits(n)) throw DimensionError("traced qubits outside the operator");
    if (traced == QubitSet::all(n)) return m.trace() * CMatrix::Identity(m.rows(), m.cols());
    const QubitSet keep = traced.complement(n);
    return embed_with_identity(partial_trace(m, n, keep), n, keep);
}

CMatrix permute_qubits(const CMatrix& m, int n, std::span<const int> order) {
    if (static_cast<int>(order.size()) != n) throw DimensionError("permutation length differs from qubit count");
    std::vector<bool> seen(n, false);
    for (int q : order) {
        if (q < 0 || q >= n || seen[q]) throw ArgumentError("not a permutation of the qubits");
        seen[q] = true;
    }
    const std::int64_t dim = hilbert_dim(n);
    // map[new_index] = old_index
    std::vector<std::int64_t> map(dim);
    for (std::int64_t idx = 0; idx < dim; ++idx) {
        std::int64_t old = 0;
        for (int k = 0; k < n; ++k) {
            if ((idx >> (n - 1 - k)) & 1) old |= std::int64_t{1} << (n - 1 - order[k]);
        }
        map[idx] = old;
    }
    CMatrix out(dim, dim);
    for (std::int64_t r = 0; r < dim; ++r)
        for (std::int64_t c = 0; c < dim; ++c) out(r, c) = m(map[r], map[c]);
    return out;
}

double purity(const StokesTensor& s) {
    const auto v = s.values();
    return std::inner_product(v.begin(), v.end(), v.begin(), 0.0);
}

}  // namespace qreflect
