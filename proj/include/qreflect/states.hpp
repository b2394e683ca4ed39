#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string_view>
#include <variant>

#include "qreflect/linalg.hpp"
#include "qreflect/repr.hpp"

namespace qreflect {

/// Ket from per-qubit symbols over {0, 1, +, -}, e.g. "01+".
CVector ket(std::string_view symbols);

/// Projector onto a ket. Throws ArgumentError unless the norm is 1 within 1e-12.
DensityState pure_state(const CVector& amplitudes);
DensityState pure_state(std::string_view symbols);

DensityState maximally_mixed(int n);
DensityState bell_phi_plus();

/// |01+>, |1+0>, |+01>, |--->.
std::array<CVector, 4> upb_kets();
/// Uniform mixture of the four UPB projectors.
DensityState upb_separable();
/// complement(upb_separable()) = (1 - sum_j |psi_j><psi_j|) / 4.
DensityState upb_bound_entangled();

/// (1 - w) 1/2^n + w rho. Throws ArgumentError unless 0 <= w <= 1.
DensityState remix(const DensityState& rho, double w);

// Random generators. Each call is a deterministic function of its seed.

struct HaarPure {};
struct MixedDirichlet {};
struct BoundedSpectrum {
    double max_eigenvalue;
};
using RandomMode = std::variant<HaarPure, MixedDirichlet, BoundedSpectrum>;

DensityState random_density(int n, const RandomMode& mode, std::uint64_t seed);

/// Haar-distributed unitary (QR of a complex Ginibre matrix with phase fix).
CMatrix random_unitary(std::int64_t dim, std::uint64_t seed);
/// Element of O(3) with determinant -1.
Eigen::Matrix3d random_reflection(std::uint64_t seed);
/// Convex mixture of `terms` random product states of n one-qubit factors.
DensityState random_product_mixture(int n, int terms, std::uint64_t seed);

/// Independent seed for stream `index` derived from `seed` (splitmix64).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace qreflect
