#include "qreflect/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qreflect/entanglement.hpp"
#include "qreflect/errors.hpp"

namespace qreflect {

namespace {

CMatrix ginibre(std::int64_t rows, std::int64_t cols, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix z(rows, cols);
    for (std::int64_t c = 0; c < cols; ++c)
        for (std::int64_t r = 0; r < rows; ++r) z(r, c) = Complex{normal(rng), normal(rng)};
    return z;
}

// Uniform point of the probability simplex.
std::vector<double> dirichlet_spectrum(std::int64_t dim, std::mt19937_64& rng) {
    std::exponential_distribution<double> exponential(1.0);
    std::vector<double> p(dim);
    double total = 0.0;
    for (double& x : p) {
        x = exponential(rng);
        total += x;
    }
    for (double& x : p) x /= total;
    return p;
}

DensityState from_spectrum(const std::vector<double>& spectrum, std::uint64_t unitary_seed) {
    const auto dim = static_cast<std::int64_t>(spectrum.size());
    const CMatrix u = random_unitary(dim, unitary_seed);
    Eigen::VectorXd d(dim);
    for (std::int64_t i = 0; i < dim; ++i) d[i] = spectrum[i];
    return DensityState(CMatrix(u * d.cast<Complex>().asDiagonal() * u.adjoint()));
}

void check_n(int n) {
    if (n < 1 || n > kMaxQubits) throw ArgumentError("qubit count " + std::to_string(n) + " outside [1, 6]");
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace

CVector ket(std::string_view symbols) {
    if (symbols.empty() || static_cast<int>(symbols.size()) > kMaxQubits) {
        throw ArgumentError("ket needs between 1 and 6 qubit symbols");
    }
    const double h = 1.0 / std::sqrt(2.0);
    CVector out = CVector::Ones(1);
    for (char ch : symbols) {
        CVector factor(2);
        switch (ch) {
            case '0': factor << 1.0, 0.0; break;
            case '1': factor << 0.0, 1.0; break;
            case '+': factor << h, h; break;
            case '-': factor << h, -h; break;
            default: throw ArgumentError(std::string("unknown ket symbol '") + ch + "'");
        }
        CVector next(out.size() * 2);
        for (Eigen::Index i = 0; i < out.size(); ++i) next.segment(2 * i, 2) = out[i] * factor;
        out = std::move(next);
    }
    return out;
}

DensityState pure_state(const CVector& amplitudes) {
    if (qubits_for_dim(amplitudes.size()) < 1) throw DimensionError("ket length must be 2^n");
    if (std::abs(amplitudes.norm() - 1.0) > 1e-12) throw ArgumentError("ket is not normalized");
    return DensityState(CMatrix(amplitudes * amplitudes.adjoint()));
}

DensityState pure_state(std::string_view symbols) { return pure_state(ket(symbols)); }

DensityState maximally_mixed(int n) {
    check_n(n);
    const auto dim = hilbert_dim(n);
    return DensityState(CMatrix(CMatrix::Identity(dim, dim) / static_cast<double>(dim)));
}

DensityState bell_phi_plus() {
    CVector v = CVector::Zero(4);
    v[0] = v[3] = 1.0 / std::sqrt(2.0);
    return pure_state(v);
}

std::array<CVector, 4> upb_kets() { return {ket("01+"), ket("1+0"), ket("+01"), ket("---")}; }

DensityState upb_separable() {
    CMatrix rho = CMatrix::Zero(8, 8);
    for (const auto& k : upb_kets()) rho += 0.25 * k * k.adjoint();
    return DensityState(rho);
}

DensityState upb_bound_entangled() { return DensityState(complement(upb_separable())); }

DensityState remix(const DensityState& rho, double w) {
    if (!(w >= 0.0 && w <= 1.0)) throw ArgumentError("remix weight must lie in [0, 1]");
    const auto dim = rho.dim();
    return DensityState(CMatrix((1.0 - w) / static_cast<double>(dim) * CMatrix::Identity(dim, dim) + w * rho.matrix()));
}

DensityState random_density(int n, const RandomMode& mode, std::uint64_t seed) {
    check_n(n);
    const auto dim = hilbert_dim(n);
    std::mt19937_64 rng(seed);
    if (std::holds_alternative<HaarPure>(mode)) {
        CVector v = ginibre(dim, 1, rng).col(0);
        return pure_state(CVector(v / v.norm()));
    }
    std::vector<double> spectrum = dirichlet_spectrum(dim, rng);
    if (const auto* bounded = std::get_if<BoundedSpectrum>(&mode)) {
        const double floor = 1.0 / static_cast<double>(dim);
        const double c = bounded->max_eigenvalue;
        if (!(c > floor && c <= 1.0)) throw ArgumentError("bounded spectrum needs 2^-n < c <= 1");
        const double top = *std::max_element(spectrum.begin(), spectrum.end());
        if (top > c) {
            const double t = (c - floor) / (top - floor);
            for (double& x : spectrum) x = floor + t * (x - floor);
        }
    }
    return from_spectrum(spectrum, derive_seed(seed, 1));
}

CMatrix random_unitary(std::int64_t dim, std::uint64_t seed) {
    if (dim < 1) throw ArgumentError("unitary dimension must be positive");
    std::mt19937_64 rng(seed);
    const CMatrix z = ginibre(dim, dim, rng);
    Eigen::HouseholderQR<CMatrix> qr(z);
    CMatrix q = qr.householderQ() * CMatrix::Identity(dim, dim);
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (std::int64_t i = 0; i < dim; ++i) {
        const Complex d = r(i, i);
        q.col(i) *= std::abs(d) > 0.0 ? d / std::abs(d) : Complex{1.0, 0.0};
    }
    return q;
}

Eigen::Matrix3d random_reflection(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::Matrix3d g;
    for (int i = 0; i < 9; ++i) g(i % 3, i / 3) = normal(rng);
    Eigen::HouseholderQR<Eigen::Matrix3d> qr(g);
    Eigen::Matrix3d q = qr.householderQ();
    if (q.determinant() > 0) q.col(0) = -q.col(0);
    return q;
}

DensityState random_product_mixture(int n, int terms, std::uint64_t seed) {
    check_n(n);
    if (terms < 1) throw ArgumentError("mixture needs at least one term");
    std::mt19937_64 rng(seed);
    const std::vector<double> weights = dirichlet_spectrum(terms, rng);
    const auto dim = hilbert_dim(n);
    CMatrix rho = CMatrix::Zero(dim, dim);
    std::uint64_t stream = 0;
    for (int t = 0; t < terms; ++t) {
        CMatrix term = random_density(1, MixedDirichlet{}, derive_seed(seed, ++stream)).matrix();
        for (int q = 1; q < n; ++q) term = kron(term, random_density(1, MixedDirichlet{}, derive_seed(seed, ++stream)).matrix());
        rho += weights[t] * term;
    }
    return DensityState(rho);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632BE59BD9B4E019ull));
}

}  // namespace qreflect
