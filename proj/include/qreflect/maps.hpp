#pragma once

// Discrete symmetry maps acting on the Stokes tensor.
//
// A SignMask is a diagonal involution of the 4^n Stokes components that
// keeps the affine component. Partial transposes, local spin flips, partial
// and total reflections and their compositions are all sign masks. Maps
// are applied Stokes-side; the Hermitian operator-sum forms below exist as
// independent verification paths.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qreflect/linalg.hpp"
#include "qreflect/qubits.hpp"
#include "qreflect/repr.hpp"

namespace qreflect {

class SignMask {
public:
    /// Throws ArgumentError unless signs has length 4^n, every entry is
    /// +1 or -1 and signs[0] == +1.
    SignMask(int n, std::vector<std::int8_t> signs, std::string name);

    int qubits() const { return n_; }
    const std::vector<std::int8_t>& signs() const { return signs_; }
    std::int8_t operator[](std::int64_t linear) const { return signs_[linear]; }
    const std::string& name() const { return name_; }

    int minus_count() const;
    /// Pointwise product; the result is the composed map.
    SignMask compose(const SignMask& other, std::string name) const;

    friend bool operator==(const SignMask& a, const SignMask& b) {
        return a.n_ == b.n_ && a.signs_ == b.signs_;
    }

private:
    int n_;
    std::vector<std::int8_t> signs_;
    std::string name_;
};

SignMask mask_identity(int n);
/// -1 where the number of digits equal to 2 on `subset` is odd.
SignMask mask_partial_transpose(int n, QubitSet subset);
/// Per-qubit factor -1 on digits 1,2,3 for each qubit in `subset`.
SignMask mask_spin_flip(int n, QubitSet subset);
/// -1 unless every digit on `subset` is 0. |subset| == n is the total reflection.
SignMask mask_total_reflection(int n, QubitSet subset);
/// Two qubits: negates exactly the two-body components.
SignMask mask_composite_c();

/// Pair of 4x4 sign matrices related by the Choi reshuffle: the first acts by
/// Hadamard product on the two-qubit real density matrix, the second on
/// stokes_as_matrix. Neither is a tensor product of one-qubit sign matrices.
struct ChoiRelatedMaskPair {
    RMatrix real_density_signs;
    RMatrix stokes_signs;
    SignMask first;   // real_density_signs as a Stokes-index mask
    SignMask second;  // stokes_signs as a Stokes-index mask
};
ChoiRelatedMaskPair choi_related_mask_pair();

/// Reads a +-1 matrix laid out like the real density matrix.
SignMask mask_from_real_density_signs(const RMatrix& signs, std::string name);
/// The mask laid out like the real density matrix (for Hadamard products).
RMatrix real_density_sign_matrix(const SignMask& mask);

StokesTensor apply_mask(const SignMask& mask, const StokesTensor& s);
HermitianOperator apply_mask(const SignMask& mask, const HermitianOperator& rho);
RealDensityMatrix apply_mask(const SignMask& mask, const RealDensityMatrix& sigma);

/// One affine 4x4 block diag(1, R), R in O(3), per qubit.
class LocalOrthogonalMap {
public:
    static LocalOrthogonalMap identity(int n);
    /// Throws ArgumentError when R R^T differs from 1 by more than 1e-10.
    LocalOrthogonalMap with_rotation(int qubit, const Eigen::Matrix3d& r) const;

    int qubits() const { return static_cast<int>(blocks_.size()); }
    const Eigen::Matrix4d& block(int qubit) const { return blocks_[qubit]; }

private:
    std::vector<Eigen::Matrix4d> blocks_;
};

StokesTensor apply_local_orthogonal(const LocalOrthogonalMap& map, const StokesTensor& s);
HermitianOperator apply_local_orthogonal(const LocalOrthogonalMap& map, const HermitianOperator& rho);

/// Rotation of the Bloch vector induced by rho -> U rho U^dagger.
Eigen::Matrix3d adjoint_rotation(const Eigen::Matrix2cd& u);

enum class Orientation { Preserving, Changing };

struct MapClassification {
    Orientation orientation;
    bool local_factorizable;
    int sign_change_count;
};

MapClassification classify(const SignMask& mask);

enum class OneQubitMap { Transpose, SpinFlip };

/// Real-density-matrix operator-sum forms on one qubit:
///   transpose: sigma(rho^T) = sigma|0><0| - sigma_z sigma |1><1|
///   spin flip: sigma(rho^S) = 2|0><0| - sigma
HermitianOperator operator_sum_onequbit(OneQubitMap which, const HermitianOperator& rho);

/// One-qubit spin flip as an antiunitary conjugation, sigma_y rho* sigma_y.
HermitianOperator spin_flip_conjugation(const HermitianOperator& rho);

/// Two-qubit double spin flip, 4 Lambda_22 rho* Lambda_22.
HermitianOperator spin_flipped_partner(const HermitianOperator& rho);

/// Composite map C as the operator sum
/// 2 sum_k (Lambda_k0 rho Lambda_k0 + Lambda_0k rho Lambda_0k) - 1/2.
HermitianOperator composite_c_operator_sum(const HermitianOperator& rho);

/// (1/3)(1_pair (x) tr_pair(rho) - rho) with the pair given by `pair`.
HermitianOperator relaxed_reflection(const HermitianOperator& rho, QubitSet pair);
/// The two-qubit relaxed reflection as a linear map on arbitrary 4x4 matrices.
CMatrix relaxed_reflection_map(const CMatrix& x);

/// Choi matrix sum_ij |i><j| (x) map(|i><j|) of a linear map on dim x dim matrices.
CMatrix choi_matrix(const std::function<CMatrix(const CMatrix&)>& map, std::int64_t dim);

/// Number of locally inequivalent diagonal symmetries, 2^(4^n - 3n - 1).
/// Throws ArgumentError for n < 1 or n > 12.
boost::multiprecision::cpp_int count_inequivalent(int n);

}  // namespace qreflect
