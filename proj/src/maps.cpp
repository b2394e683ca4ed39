#include "qreflect/maps.hpp"

#include <cmath>
#include <string>

#include "qreflect/errors.hpp"
#include "qreflect/kernels.hpp"

namespace qreflect {

namespace {

int digit_at(std::int64_t linear, int n, int q) { return static_cast<int>((linear >> (2 * (n - 1 - q))) & 3); }

void check_subset(int n, QubitSet subset) {
    if (n < 1 || n > kMaxQubits) throw DimensionError("qubit count " + std::to_string(n) + " unsupported");
    if (!subset.fits(n)) throw DimensionError("subset " + subset.label() + " exceeds " + std::to_string(n) + " qubits");
}

template <typename Rule>
SignMask build_mask(int n, std::string name, Rule rule) {
    std::vector<std::int8_t> signs(stokes_size(n));
    for (std::int64_t i = 0; i < stokes_size(n); ++i) signs[i] = rule(i) ? -1 : 1;
    return SignMask(n, std::move(signs), std::move(name));
}

void require_qubits(const HermitianOperator& rho, int n, const char* what) {
    if (rho.qubits() != n) {
        throw DimensionError(std::string(what) + " needs " + std::to_string(n) + " qubit(s), got " +
                             std::to_string(rho.qubits()));
    }
}

}  // namespace

SignMask::SignMask(int n, std::vector<std::int8_t> signs, std::string name)
    : n_(n), signs_(std::move(signs)), name_(std::move(name)) {
    if (n < 1 || n > kMaxQubits) throw ArgumentError("mask qubit count out of range");
    if (static_cast<std::int64_t>(signs_.size()) != stokes_size(n)) throw ArgumentError("mask needs 4^n signs");
    for (auto s : signs_) {
        if (s != 1 && s != -1) throw ArgumentError("mask entries must be +1 or -1");
    }
    if (signs_[0] != 1) throw ArgumentError("mask must keep the affine component");
}

int SignMask::minus_count() const {
    int count = 0;
    for (auto s : signs_) count += s < 0;
    return count;
}

SignMask SignMask::compose(const SignMask& other, std::string name) const {
    if (other.n_ != n_) throw DimensionError("composing masks of different qubit counts");
    std::vector<std::int8_t> signs(signs_.size());
    for (std::size_t i = 0; i < signs.size(); ++i) signs[i] = static_cast<std::int8_t>(signs_[i] * other.signs_[i]);
    return SignMask(n_, std::move(signs), std::move(name));
}

SignMask mask_identity(int n) {
    check_subset(n, {});
    return build_mask(n, "identity", [](std::int64_t) { return false; });
}

SignMask mask_partial_transpose(int n, QubitSet subset) {
    check_subset(n, subset);
    return build_mask(n, "T_" + subset.label(), [&](std::int64_t i) {
        int twos = 0;
        for (int q : subset.members()) twos += digit_at(i, n, q) == 2;
        return (twos & 1) != 0;
    });
}

SignMask mask_spin_flip(int n, QubitSet subset) {
    check_subset(n, subset);
    return build_mask(n, "S_" + subset.label(), [&](std::int64_t i) {
        int flips = 0;
        for (int q : subset.members()) flips += digit_at(i, n, q) != 0;
        return (flips & 1) != 0;
    });
}

SignMask mask_total_reflection(int n, QubitSet subset) {
    check_subset(n, subset);
    if (subset.empty()) throw ArgumentError("reflection needs at least one qubit");
    return build_mask(n, "R_" + subset.label(), [&](std::int64_t i) {
        for (int q : subset.members()) {
            if (digit_at(i, n, q) != 0) return true;
        }
        return false;
    });
}

SignMask mask_composite_c() {
    const QubitSet ab{0, 1};
    return mask_spin_flip(2, ab).compose(mask_total_reflection(2, ab), "C");
}

ChoiRelatedMaskPair choi_related_mask_pair() {
    RMatrix real_signs(4, 4);
    real_signs << 1, 1, 1, 1,
                  1, -1, -1, 1,
                  1, -1, -1, 1,
                  1, 1, 1, 1;
    RMatrix stokes_signs(4, 4);
    stokes_signs << 1, 1, 1, -1,
                    1, 1, -1, 1,
                    1, -1, 1, 1,
                    -1, 1, 1, 1;
    std::vector<std::int8_t> signs(16);
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) signs[4 * j + k] = static_cast<std::int8_t>(stokes_signs(j, k));
    return {real_signs, stokes_signs, mask_from_real_density_signs(real_signs, "choi_pair_real"),
            SignMask(2, std::move(signs), "choi_pair_stokes")};
}

SignMask mask_from_real_density_signs(const RMatrix& signs, std::string name) {
    const int n = qubits_for_dim(signs.rows());
    if (n < 1 || signs.rows() != signs.cols()) throw DimensionError("sign matrix must be 2^n x 2^n");
    std::vector<std::int8_t> out(stokes_size(n));
    for (std::int64_t i = 0; i < stokes_size(n); ++i) {
        const auto [r, c] = real_density_position(n, i);
        const double v = signs(r, c);
        if (v != 1.0 && v != -1.0) throw ArgumentError("sign matrix entries must be +1 or -1");
        out[i] = static_cast<std::int8_t>(v);
    }
    return SignMask(n, std::move(out), std::move(name));
}

RMatrix real_density_sign_matrix(const SignMask& mask) {
    const int n = mask.qubits();
    RMatrix out(hilbert_dim(n), hilbert_dim(n));
    for (std::int64_t i = 0; i < stokes_size(n); ++i) {
        const auto [r, c] = real_density_position(n, i);
        out(r, c) = mask[i];
    }
    return out;
}

StokesTensor apply_mask(const SignMask& mask, const StokesTensor& s) {
    if (mask.qubits() != s.qubits()) throw DimensionError("mask and tensor qubit counts differ");
    std::vector<double> out(s.values().size());
    kernels::apply_signs(s.values(), mask.signs(), out);
    return StokesTensor(s.qubits(), std::move(out));
}

HermitianOperator apply_mask(const SignMask& mask, const HermitianOperator& rho) {
    return from_stokes(apply_mask(mask, to_stokes(rho)));
}

RealDensityMatrix apply_mask(const SignMask& mask, const RealDensityMatrix& sigma) {
    if (mask.qubits() != sigma.qubits()) throw DimensionError("mask and matrix qubit counts differ");
    return RealDensityMatrix(sigma.qubits(), real_density_sign_matrix(mask).cwiseProduct(sigma.matrix()));
}

// ---------------------------------------------------------------------------

LocalOrthogonalMap LocalOrthogonalMap::identity(int n) {
    if (n < 1 || n > kMaxQubits) throw DimensionError("qubit count out of range");
    LocalOrthogonalMap map;
    map.blocks_.assign(n, Eigen::Matrix4d::Identity());
    return map;
}

LocalOrthogonalMap LocalOrthogonalMap::with_rotation(int qubit, const Eigen::Matrix3d& r) const {
    if (qubit < 0 || qubit >= qubits()) throw DimensionError("rotation qubit out of range");
    if ((r * r.transpose() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() > 1e-10) {
        throw ArgumentError("block is not orthogonal");
    }
    LocalOrthogonalMap out = *this;
    out.blocks_[qubit] = Eigen::Matrix4d::Identity();
    out.blocks_[qubit].bottomRightCorner<3, 3>() = r;
    return out;
}

StokesTensor apply_local_orthogonal(const LocalOrthogonalMap& map, const StokesTensor& s) {
    const int n = s.qubits();
    if (map.qubits() != n) throw DimensionError("map and tensor qubit counts differ");
    std::vector<double> values(s.values().begin(), s.values().end());
    for (int q = 0; q < n; ++q) {
        const Eigen::Matrix4d& block = map.block(q);
        if (block.isIdentity(0.0)) continue;
        const std::int64_t stride = std::int64_t{1} << (2 * (n - 1 - q));
        for (std::int64_t i = 0; i < stokes_size(n); ++i) {
            if (digit_at(i, n, q) != 0) continue;
            Eigen::Vector4d fiber;
            for (int d = 0; d < 4; ++d) fiber[d] = values[i + d * stride];
            const Eigen::Vector4d rotated = block * fiber;
            for (int d = 0; d < 4; ++d) values[i + d * stride] = rotated[d];
        }
    }
    return StokesTensor(n, std::move(values));
}

HermitianOperator apply_local_orthogonal(const LocalOrthogonalMap& map, const HermitianOperator& rho) {
    return from_stokes(apply_local_orthogonal(map, to_stokes(rho)));
}

Eigen::Matrix3d adjoint_rotation(const Eigen::Matrix2cd& u) {
    Eigen::Matrix3d r;
    for (int i = 1; i <= 3; ++i) {
        const CMatrix li = basis_element(MultiIndex({i}));
        for (int j = 1; j <= 3; ++j) {
            const CMatrix lj = basis_element(MultiIndex({j}));
            r(i - 1, j - 1) = (li * u * lj * u.adjoint()).trace().real();
        }
    }
    return r;
}

MapClassification classify(const SignMask& mask) {
    const int n = mask.qubits();
    MapClassification out{};
    out.sign_change_count = mask.minus_count();
    out.orientation = (out.sign_change_count % 2) ? Orientation::Changing : Orientation::Preserving;

    // Per-qubit factor read off the indices with a single nonzero digit.
    std::vector<std::array<int, 4>> factors(n);
    for (int q = 0; q < n; ++q) {
        for (int d = 0; d < 4; ++d) factors[q][d] = mask[static_cast<std::int64_t>(d) << (2 * (n - 1 - q))];
    }
    out.local_factorizable = true;
    for (std::int64_t i = 0; i < stokes_size(n) && out.local_factorizable; ++i) {
        int product = 1;
        for (int q = 0; q < n; ++q) product *= factors[q][digit_at(i, n, q)];
        out.local_factorizable = product == mask[i];
    }
    return out;
}

// ---------------------------------------------------------------------------

HermitianOperator operator_sum_onequbit(OneQubitMap which, const HermitianOperator& rho) {
    require_qubits(rho, 1, "one-qubit operator sum");
    const RMatrix sigma = to_real_density(to_stokes(rho)).matrix();
    RMatrix ket0 = RMatrix::Zero(2, 2);
    ket0(0, 0) = 1.0;
    RMatrix out;
    if (which == OneQubitMap::Transpose) {
        RMatrix ket1 = RMatrix::Zero(2, 2);
        ket1(1, 1) = 1.0;
        RMatrix pauli_z = RMatrix::Zero(2, 2);
        pauli_z(0, 0) = 1.0;
        pauli_z(1, 1) = -1.0;
        out = sigma * ket0 - pauli_z * sigma * ket1;
    } else {
        out = 2.0 * ket0 - sigma;
    }
    return from_stokes(from_real_density(RealDensityMatrix(1, out)));
}

HermitianOperator spin_flip_conjugation(const HermitianOperator& rho) {
    require_qubits(rho, 1, "spin_flip_conjugation");
    Eigen::Matrix2cd pauli_y;
    pauli_y << 0, Complex{0, -1}, Complex{0, 1}, 0;
    return HermitianOperator(pauli_y * rho.matrix().conjugate() * pauli_y);
}

HermitianOperator spin_flipped_partner(const HermitianOperator& rho) {
    require_qubits(rho, 2, "spin_flipped_partner");
    const CMatrix l22 = basis_element(MultiIndex({2, 2}));
    return HermitianOperator(4.0 * l22 * rho.matrix().conjugate() * l22);
}

HermitianOperator composite_c_operator_sum(const HermitianOperator& rho) {
    require_qubits(rho, 2, "composite_c_operator_sum");
    CMatrix acc = CMatrix::Zero(4, 4);
    for (int k = 1; k <= 3; ++k) {
        const CMatrix lk0 = basis_element(MultiIndex({k, 0}));
        const CMatrix l0k = basis_element(MultiIndex({0, k}));
        acc += lk0 * rho.matrix() * lk0 + l0k * rho.matrix() * l0k;
    }
    return HermitianOperator(2.0 * acc - 0.5 * CMatrix::Identity(4, 4));
}

CMatrix relaxed_reflection_map(const CMatrix& x) {
    if (x.rows() != 4 || x.cols() != 4) throw DimensionError("relaxed reflection acts on 4x4 matrices");
    return (x.trace() * CMatrix::Identity(4, 4) - x) / 3.0;
}

HermitianOperator relaxed_reflection(const HermitianOperator& rho, QubitSet pair) {
    const int n = rho.qubits();
    if (n < 2) throw DimensionError("relaxed reflection needs at least two qubits");
    if (pair.size() != 2) throw ArgumentError("relaxed reflection acts on exactly two qubits");
    if (!pair.fits(n)) throw DimensionError("qubit pair exceeds the operator");
    return HermitianOperator((replace_with_identity(rho.matrix(), n, pair) - rho.matrix()) / 3.0);
}

CMatrix choi_matrix(const std::function<CMatrix(const CMatrix&)>& map, std::int64_t dim) {
    CMatrix out = CMatrix::Zero(dim * dim, dim * dim);
    for (std::int64_t i = 0; i < dim; ++i) {
        for (std::int64_t j = 0; j < dim; ++j) {
            CMatrix unit = CMatrix::Zero(dim, dim);
            unit(i, j) = 1.0;
            const CMatrix image = map(unit);
            if (image.rows() != dim || image.cols() != dim) throw DimensionError("map changes the matrix size");
            out.block(i * dim, j * dim, dim, dim) = image;
        }
    }
    return out;
}

boost::multiprecision::cpp_int count_inequivalent(int n) {
    if (n < 1 || n > 12) throw ArgumentError("count_inequivalent supports 1 <= n <= 12");
    const std::uint64_t exponent = (std::uint64_t{1} << (2 * n)) - 3 * static_cast<std::uint64_t>(n) - 1;
    return boost::multiprecision::cpp_int(1) << exponent;
}

}  // namespace qreflect
