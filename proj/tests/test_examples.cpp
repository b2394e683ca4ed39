#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "qreflect/entanglement.hpp"
#include "qreflect/io.hpp"
#include "qreflect/maps.hpp"
#include "qreflect/spectral.hpp"
#include "qreflect/states.hpp"

using namespace qreflect;

namespace {

const double kH = 1.0 / std::sqrt(2.0);

template <typename M>
double max_abs(const Eigen::MatrixBase<M>& m) {
    return m.cwiseAbs().maxCoeff();
}

CMatrix projector(std::string_view symbols) { return pure_state(symbols).matrix(); }

std::vector<int> minus_positions(const SignMask& m) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(m.signs().size()); ++i)
        if (m[i] < 0) out.push_back(i);
    return out;
}

}  // namespace

TEST(Examples, BasisElements) {
    EXPECT_LT(max_abs(basis_element(MultiIndex({0})) - kH * CMatrix::Identity(2, 2)), 1e-16);
    CMatrix y(2, 2);
    y << 0, Complex(0, -kH), Complex(0, kH), 0;
    EXPECT_LT(max_abs(basis_element(MultiIndex({2})) - y), 1e-16);
    Eigen::Vector4cd zz(0.5, -0.5, -0.5, 0.5);
    EXPECT_LT(max_abs(basis_element(MultiIndex({3, 3})) - CMatrix(zz.asDiagonal())), 1e-15);
}

TEST(Examples, BasisIsOrthonormal) {
    for (int n = 1; n <= 3; ++n)
        for (long a = 0; a < stokes_size(n); ++a) {
            const CMatrix la = basis_element(MultiIndex::from_linear(n, a));
            for (long b = 0; b < stokes_size(n); ++b) {
                const Complex t = (la * basis_element(MultiIndex::from_linear(n, b))).trace();
                ASSERT_NEAR(std::abs(t - Complex(a == b ? 1.0 : 0.0)), 0.0, 1e-14) << n << ' ' << a << ' ' << b;
            }
        }
}

TEST(Examples, OneQubitStokesValues) {
    const StokesTensor mixed = to_stokes(maximally_mixed(1));
    const StokesTensor zero = to_stokes(pure_state("0"));
    const std::vector<double> e_mixed{kH, 0, 0, 0}, e_zero{kH, 0, 0, kH};
    for (int i = 0; i < 4; ++i) {
        EXPECT_NEAR(mixed[i], e_mixed[i], 1e-15);
        EXPECT_NEAR(zero[i], e_zero[i], 1e-15);
    }
    std::vector<double> homogeneous_zero(16, 0.0);
    homogeneous_zero[0] = 0.5;
    EXPECT_LT(max_abs(from_stokes(StokesTensor(2, homogeneous_zero)).matrix() - maximally_mixed(2).matrix()), 1e-16);
    std::vector<double> bell(16, 0.0);
    bell[0] = bell[5] = bell[15] = 0.5;
    bell[10] = -0.5;
    EXPECT_LT(max_abs(from_stokes(StokesTensor(2, bell)).matrix() - bell_phi_plus().matrix()), 1e-15);
}

TEST(Examples, OneQubitSpectrumFormula) {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const DensityState rho = random_density(1, MixedDirichlet{}, s);
        const StokesTensor v = to_stokes(rho);
        const double r = std::sqrt(v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
        const auto ev = eig_hermitian(rho).eigenvalues;
        EXPECT_NEAR(ev[0], kH * (kH + r), 1e-12);
        EXPECT_NEAR(ev[1], kH * (kH - r), 1e-12);
    }
}

TEST(Examples, RealDensitySmallCases) {
    RMatrix e00 = RMatrix::Zero(2, 2);
    e00(0, 0) = 1.0;
    EXPECT_LT(max_abs(RMatrix(to_real_density(to_stokes(maximally_mixed(1))).matrix() - e00)), 1e-15);
    EXPECT_LT(max_abs(RMatrix(to_real_density(to_stokes(pure_state("0"))).matrix() - RMatrix::Identity(2, 2))), 1e-15);
    for (std::uint64_t s = 0; s < 10; ++s) {
        const DensityState a = random_density(1, MixedDirichlet{}, s);
        const DensityState b = random_density(1, MixedDirichlet{}, s + 100);
        const RMatrix joint = to_real_density(to_stokes(tensor_product(a, b))).matrix();
        EXPECT_LT(max_abs(RMatrix(joint - kron(to_real_density(to_stokes(a)).matrix(), to_real_density(to_stokes(b)).matrix()))),
                  1e-12);
    }
}

TEST(Examples, StokesMatrix) {
    RMatrix e00 = RMatrix::Zero(4, 4);
    e00(0, 0) = 1.0;
    EXPECT_LT(max_abs(RMatrix(stokes_as_matrix(to_stokes(maximally_mixed(2))) - e00)), 1e-15);
    const RMatrix bell = stokes_as_matrix(to_stokes(bell_phi_plus()));
    EXPECT_LT(max_abs(RMatrix(bell - RMatrix(Eigen::Vector4d(1, 1, -1, 1).asDiagonal()))), 1e-15);
    EXPECT_NEAR(ccn_via_stokes(to_stokes(bell_phi_plus())), 2.0, 1e-14);
    EXPECT_NEAR(ccn_via_stokes(to_stokes(maximally_mixed(2))), 0.5, 1e-15);
}

TEST(Examples, ChoiReshuffleCases) {
    const CMatrix m = random_unitary(4, 1);
    EXPECT_TRUE(choi_reshuffle(choi_reshuffle(m)) == m);
    const CMatrix r1 = random_density(1, MixedDirichlet{}, 2).matrix();
    const CMatrix r2 = random_density(1, MixedDirichlet{}, 3).matrix();
    const auto sv = svd_values(choi_reshuffle(oracle::kron(CMatrix(r1.transpose()), r2)));
    EXPECT_NEAR(sv[0], r1.norm() * r2.norm(), 1e-14);
    for (int i = 1; i < 4; ++i) EXPECT_NEAR(sv[i], 0.0, 1e-14);
    const auto mixed = svd_values(choi_reshuffle(maximally_mixed(2).matrix()));
    EXPECT_NEAR(mixed[0], 0.5, 1e-15);
    for (int i = 1; i < 4; ++i) EXPECT_NEAR(mixed[i], 0.0, 1e-15);
    EXPECT_NEAR(ccn(maximally_mixed(2), QubitSet{0}), 0.5, 1e-14);
}

TEST(Examples, SchmidtPairsInReshuffledPureStates) {
    // |psi> = c1|00> + c2|11>: Choi(rho) has singular values c1^2, c2^2 and the pair c1 c2,
    // the Stokes matrix has twice these.
    for (double t : {0.2, 0.5, 0.7}) {
        const double c1 = std::cos(t), c2 = std::sin(t);
        CVector v = CVector::Zero(4);
        v[0] = c1;
        v[3] = c2;
        const CMatrix u = kron(random_unitary(2, 11), random_unitary(2, 12));
        const DensityState rho = pure_state(CVector(u * v));
        auto sv = svd_values(choi_reshuffle(rho.matrix()));
        std::vector<double> expected{c1 * c1, c2 * c2, c1 * c2, c1 * c2};
        std::sort(expected.begin(), expected.end(), std::greater<>());
        for (int i = 0; i < 4; ++i) EXPECT_NEAR(sv[i], expected[i], 1e-9);
        const auto stokes_sv = svd_values(stokes_as_matrix(to_stokes(rho)));
        for (int i = 0; i < 4; ++i) EXPECT_NEAR(stokes_sv[i], 2 * expected[i], 1e-9);
    }
}

TEST(Examples, TensorProductAndPartialTrace) {
    EXPECT_LT(max_abs(tensor_product(maximally_mixed(1), maximally_mixed(1)).matrix() - maximally_mixed(2).matrix()), 1e-16);
    EXPECT_LT(max_abs(tensor_product(pure_state("0"), pure_state("1")).matrix() - projector("01")), 1e-16);
    const DensityState a = random_density(1, MixedDirichlet{}, 5);
    const DensityState b = random_density(2, MixedDirichlet{}, 6);
    const StokesTensor sa = to_stokes(a), sb = to_stokes(b), sab = to_stokes(tensor_product(a, b));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 16; ++j) EXPECT_NEAR(sab[16 * i + j], sa[i] * sb[j], 1e-14);
    EXPECT_LT(max_abs(partial_trace(tensor_product(a, b), QubitSet{0}).matrix() - a.matrix()), 1e-15);
    EXPECT_LT(max_abs(partial_trace(bell_phi_plus(), QubitSet{0}).matrix() - maximally_mixed(1).matrix()), 1e-15);
}

TEST(Examples, Purity) {
    EXPECT_NEAR(purity(to_stokes(bell_phi_plus())), 1.0, 1e-14);
    EXPECT_NEAR(purity(to_stokes(maximally_mixed(2))), 0.25, 1e-15);
}

TEST(Examples, MaskPatterns) {
    EXPECT_EQ(minus_positions(mask_partial_transpose(2, QubitSet{0})), (std::vector<int>{8, 9, 10, 11}));
    std::vector<int> one_two;
    for (int i = 0; i < 16; ++i)
        if ((i / 4 == 2) != (i % 4 == 2)) one_two.push_back(i);
    EXPECT_EQ(minus_positions(mask_partial_transpose(2, QubitSet{0, 1})), one_two);
    EXPECT_TRUE(minus_positions(mask_partial_transpose(2, QubitSet{})).empty());
    for (int i = 5; i < 16; ++i)
        if (i % 4 != 0) EXPECT_EQ(mask_spin_flip(2, QubitSet{0, 1})[i], 1) << i;
    EXPECT_EQ(minus_positions(mask_spin_flip(1, QubitSet{0})), (std::vector<int>{1, 2, 3}));
    for (int i = 1; i < 64; ++i) EXPECT_EQ(mask_total_reflection(3, QubitSet{0, 1})[i], i < 4 ? 1 : -1) << i;
    const SignMask composed = mask_spin_flip(2, QubitSet{0, 1}).compose(mask_total_reflection(2, QubitSet{0, 1}), "c");
    EXPECT_EQ(mask_composite_c(), composed);
    for (int i = 1; i < 16; ++i) EXPECT_EQ(mask_composite_c()[i], (i / 4 && i % 4) ? -1 : 1) << i;
}

TEST(Examples, MaskActions) {
    const DensityState rho = random_density(2, MixedDirichlet{}, 7);
    EXPECT_LT(max_abs(apply_mask(mask_identity(2), rho).matrix() - rho.matrix()), 1e-15);
    EXPECT_LT(max_abs(apply_mask(mask_total_reflection(2, QubitSet{0, 1}), rho).matrix() -
                      (0.5 * CMatrix::Identity(4, 4) - rho.matrix())),
              1e-15);
    EXPECT_LT(max_abs(apply_mask(mask_spin_flip(1, QubitSet{0}), pure_state("0")).matrix() - projector("1")), 1e-15);
    EXPECT_LT(max_abs(spin_flipped_partner(bell_phi_plus()).matrix() - bell_phi_plus().matrix()), 1e-15);
    EXPECT_LT(max_abs(spin_flipped_partner(pure_state("00")).matrix() - projector("11")), 1e-15);
    const auto rt = LocalOrthogonalMap::identity(2).with_rotation(0, Eigen::Vector3d(1, -1, 1).asDiagonal().toDenseMatrix());
    EXPECT_LT(max_abs(apply_local_orthogonal(rt, rho).matrix() - apply_mask(mask_partial_transpose(2, QubitSet{0}), rho).matrix()),
              1e-15);
}

TEST(Examples, OneQubitReflectionsKeepSpectrum) {
    const DensityState q = random_density(1, MixedDirichlet{}, 8);
    const auto e = eig_hermitian(q).eigenvalues;
    const auto et = eig_hermitian(apply_mask(mask_partial_transpose(1, QubitSet{0}), q)).eigenvalues;
    const auto es = eig_hermitian(apply_mask(mask_spin_flip(1, QubitSet{0}), q)).eigenvalues;
    for (int i = 0; i < 2; ++i) {
        EXPECT_NEAR(e[i], et[i], 1e-14);
        EXPECT_NEAR(e[i], es[i], 1e-14);
    }
}

TEST(Examples, PartialReflectionsKeepPurityNotSpectrum) {
    const DensityState rho = random_density(3, MixedDirichlet{}, 9);
    const HermitianOperator out = apply_mask(mask_total_reflection(3, QubitSet{0, 1}), rho);
    EXPECT_NEAR(purity(to_stokes(out)), purity(to_stokes(rho)), 1e-14);
    const auto a = eig_hermitian(rho).eigenvalues;
    const auto b = eig_hermitian(out).eigenvalues;
    double gap = 0.0;
    for (int i = 0; i < 8; ++i) gap = std::max(gap, std::abs(a[i] - b[i]));
    EXPECT_GT(gap, 1e-3);
}

TEST(Examples, FactorizabilityFollowsConstruction) {
    for (int n = 2; n <= 3; ++n)
        for (std::uint32_t m = 1; m <= QubitSet::all(n).mask(); ++m) {
            const QubitSet s = QubitSet::from_mask(m);
            for (const SignMask& local : {mask_partial_transpose(n, s), mask_spin_flip(n, s)}) {
                EXPECT_TRUE(classify(local).local_factorizable) << local.name();
                EXPECT_EQ(classify(local).orientation, Orientation::Preserving) << local.name();
            }
            EXPECT_EQ(classify(mask_total_reflection(n, s)).local_factorizable, s.size() == 1);
        }
    EXPECT_EQ(classify(mask_total_reflection(2, QubitSet{0, 1})).orientation, Orientation::Changing);
}

TEST(Examples, SpectralSmallCases) {
    const auto diag = svd_values(RMatrix(Eigen::Vector3d(-3, 1, 2).asDiagonal()));
    EXPECT_EQ(diag, (std::vector<double>{3, 2, 1}));
    const Eigen::Vector3d u(1, 2, 2);
    const Eigen::Vector3d v(0, 3, 4);
    const auto outer = svd_values(RMatrix(u * v.transpose()));
    EXPECT_NEAR(outer[0], 15.0, 1e-13);
    EXPECT_NEAR(outer[1], 0.0, 1e-13);
    for (std::uint64_t s = 0; s < 5; ++s) {
        const CMatrix c = random_unitary(4, s) * CMatrix(Eigen::Vector4cd(3, 1, 0.5, 0.1).asDiagonal()) * random_unitary(4, s + 9);
        const RMatrix m = c.real();
        const auto sv = svd_values(m);
        auto gram = eig_hermitian(CMatrix((m.transpose() * m).cast<Complex>())).eigenvalues;
        for (int i = 0; i < 4; ++i) EXPECT_NEAR(sv[i], std::sqrt(std::max(gram[i], 0.0)), 1e-10);
        const CMatrix h = c + c.adjoint();
        const auto ev = eig_hermitian(h).eigenvalues;
        double sum = 0, squares = 0;
        for (double x : ev) {
            sum += x;
            squares += x * x;
        }
        EXPECT_NEAR(sum, h.trace().real(), 1e-10);
        EXPECT_NEAR(squares, (h * h).trace().real(), 1e-10);
    }
    EXPECT_EQ(rank(pure_state("01")), 1);
    EXPECT_NEAR(min_eig(pure_state("01")), 0.0, 1e-12);
    EXPECT_NEAR(min_eig(CMatrix(0.5 * CMatrix::Identity(4, 4) - projector("0+"))), -0.5, 1e-14);
    EXPECT_EQ(rank(maximally_mixed(3)), 8);
    for (double x : eig_hermitian(maximally_mixed(3)).eigenvalues) EXPECT_NEAR(x, 0.125, 1e-15);
}

TEST(Examples, CriterionSmallCases) {
    EXPECT_NEAR(concurrence(maximally_mixed(2)), 0.0, 1e-12);
    EXPECT_NEAR(concurrence(pure_state("0+")), 0.0, 1e-7);
    EXPECT_NEAR(lorentz_metric(to_stokes(bell_phi_plus())), 1.0, 1e-14);
    // Only the affine term survives: (1/2)^2 = tr(1/16).
    EXPECT_NEAR(lorentz_metric(to_stokes(maximally_mixed(2))), 0.25, 1e-15);
    const auto r = reduction_criterion(pure_state("0+"), QubitSet{1});
    EXPECT_EQ(r.verdict, Verdict::SeparableConsistent);
    EXPECT_GE(r.witness, -1e-12);
    EXPECT_TRUE(total_reflection_feasible(pure_state("+")).exact);
    for (int n = 2; n <= 3; ++n) {
        const auto pure = total_reflection_feasible(random_density(n, HaarPure{}, 30 + n));
        EXPECT_FALSE(pure.exact) << n;
    }
}

TEST(Examples, UpbChain) {
    const DensityState sep = upb_separable();
    EXPECT_NEAR(sep.matrix().trace().real(), 1.0, 1e-15);
    // Purity from the Gram matrix: (1/16) sum |<i|j>|^2.
    std::ifstream in(std::filesystem::path(QREFLECT_FIXTURES) / "upb_gram.json");
    const auto pinned = nlohmann::json::parse(in)["gram"];
    double gram_sum = 0.0;
    const auto kets = upb_kets();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const double g = pinned[i][j].get<double>();
            EXPECT_NEAR(std::abs(kets[i].dot(kets[j])), std::abs(g), 1e-15);
            gram_sum += g * g;
        }
    EXPECT_NEAR(purity(to_stokes(sep)), gram_sum / 16.0, 1e-14);
    for (int q = 0; q < 3; ++q) EXPECT_EQ(ppt_test(sep, QubitSet{q}).verdict, Verdict::SeparableConsistent);

    const auto feasible = total_reflection_feasible(sep);
    EXPECT_TRUE(feasible.exact);
    CMatrix expected = CMatrix::Identity(8, 8);
    for (const auto& k : kets) expected -= k * k.adjoint();
    expected /= 4.0;
    EXPECT_LT(max_abs(complement(sep).matrix() - expected), 1e-15);
    EXPECT_LT(max_abs(upb_bound_entangled().matrix() - expected), 1e-15);
    for (const auto& k : kets) EXPECT_LT(min_eig(complement(pure_state(k))), -0.5);
}

TEST(Examples, DirichletMeanIsMaximallyMixed) {
    CMatrix mean = CMatrix::Zero(4, 4);
    const int samples = 10000;
    for (int s = 0; s < samples; ++s) mean += random_density(2, MixedDirichlet{}, derive_seed(99, s)).matrix();
    mean /= static_cast<double>(samples);
    EXPECT_LT(max_abs(mean - maximally_mixed(2).matrix()), 5e-2);
}
