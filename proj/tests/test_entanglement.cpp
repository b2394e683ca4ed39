#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "qreflect/entanglement.hpp"
#include "qreflect/errors.hpp"
#include "qreflect/maps.hpp"
#include "qreflect/spectral.hpp"
#include "qreflect/states.hpp"

using namespace qreflect;

namespace {

DensityState werner(double p) { return remix(bell_phi_plus(), p); }

}  // namespace

TEST(Ppt, BellAndProduct) {
    const auto bell = ppt_test(bell_phi_plus(), QubitSet{0});
    EXPECT_EQ(bell.verdict, Verdict::Entangled);
    EXPECT_NEAR(bell.witness, -0.5, 1e-12);
    const auto product = ppt_test(pure_state("0+"), QubitSet{1});
    EXPECT_EQ(product.verdict, Verdict::SeparableConsistent);
    EXPECT_NEAR(product.witness, 0.0, 1e-12);
    EXPECT_THROW(ppt_test(bell_phi_plus(), QubitSet{0, 1}), ArgumentError);
    EXPECT_THROW(ppt_test(bell_phi_plus(), QubitSet{2}), DimensionError);
}

TEST(Ppt, WernerThreshold) {
    EXPECT_EQ(ppt_test(werner(0.30), QubitSet{0}).verdict, Verdict::SeparableConsistent);
    EXPECT_EQ(ppt_test(werner(0.36), QubitSet{0}).verdict, Verdict::Entangled);
    EXPECT_NEAR(ppt_test(werner(0.6), QubitSet{0}).witness, (1.0 - 3 * 0.6) / 4.0, 1e-12);
}

TEST(Ccn, ClosedForms) {
    EXPECT_NEAR(ccn(bell_phi_plus(), QubitSet{0}), 2.0, 1e-12);
    EXPECT_NEAR(ccn(pure_state("01"), QubitSet{0}), 1.0, 1e-12);
    const CVector a = random_unitary(2, 1).col(0);
    const CVector b = random_unitary(2, 2).col(0);
    EXPECT_NEAR(ccn(pure_state(CVector(kron(CMatrix(a), CMatrix(b)))), QubitSet{0}), 1.0, 1e-12);
    for (double p : {0.0, 0.2, 0.5, 0.9}) {
        EXPECT_NEAR(ccn(werner(p), QubitSet{0}), (1.0 + 3.0 * p) / 2.0, 1e-12);
        EXPECT_NEAR(ccn_via_stokes(to_stokes(werner(p))), (1.0 + 3.0 * p) / 2.0, 1e-12);
    }
    EXPECT_EQ(ccn_test(bell_phi_plus(), QubitSet{0}).verdict, Verdict::Entangled);
    EXPECT_THROW(ccn_via_stokes(to_stokes(maximally_mixed(3))), DimensionError);
}

TEST(Ccn, PartyChoiceOnThreeQubits) {
    // Bell pair on A,C with B in |0>: the A|BC cut sees the Bell pair, the B|AC cut does not.
    CVector v = CVector::Zero(8);
    v[0] = v[5] = 1.0 / std::sqrt(2.0);
    const DensityState rho = pure_state(v);
    EXPECT_NEAR(ccn(rho, QubitSet{0}), 2.0, 1e-12);
    EXPECT_NEAR(ccn(rho, QubitSet{1}), 1.0, 1e-12);
    EXPECT_NEAR(ccn(rho, QubitSet{0, 1}), 2.0, 1e-12);
}

TEST(Concurrence, ClosedForms) {
    EXPECT_NEAR(concurrence(bell_phi_plus()), 1.0, 1e-7);
    EXPECT_NEAR(concurrence(pure_state("01")), 0.0, 1e-7);
    for (double p : {0.2, 0.5, 0.8}) EXPECT_NEAR(concurrence(werner(p)), std::max(0.0, (3 * p - 1) / 2), 1e-7);
    for (double t : {0.1, 0.4, 1.1}) {
        CVector v = CVector::Zero(4);
        v[0] = std::cos(t);
        v[3] = std::sin(t);
        EXPECT_NEAR(concurrence(pure_state(v)), std::abs(std::sin(2 * t)), 1e-7);
    }
}

TEST(Lorentz, MatchesTraceOfFlippedProduct) {
    const DensityState rho = random_density(2, MixedDirichlet{}, 3);
    const CMatrix yy = oracle::kron(oracle::pauli(2), oracle::pauli(2));
    const double direct = (rho.matrix() * yy * rho.matrix().conjugate() * yy).trace().real();
    EXPECT_NEAR(lorentz_metric(to_stokes(rho)), direct, 1e-13);
}

TEST(Reduction, BellAndTrace) {
    const auto r = reduction_criterion(bell_phi_plus(), QubitSet{0});
    EXPECT_EQ(r.verdict, Verdict::Entangled);
    EXPECT_NEAR(r.witness, -0.5, 1e-12);
    ASSERT_EQ(r.details.size(), 1u);
    EXPECT_NEAR(r.details[0].second, 1.0, 1e-12);
    const auto r3 = reduction_criterion(maximally_mixed(3), QubitSet{0, 1});
    EXPECT_EQ(r3.verdict, Verdict::SeparableConsistent);
    EXPECT_NEAR(r3.details[0].second, 3.0, 1e-12);
}

TEST(Feasibility, FlagsAndCounterexampleFamily) {
    const auto mixed = total_reflection_feasible(maximally_mixed(2));
    EXPECT_TRUE(mixed.sufficient && mixed.exact && mixed.purity_bound && mixed.rank_bound);
    EXPECT_EQ(mixed.report.verdict, Verdict::Feasible);

    const auto pure = total_reflection_feasible(bell_phi_plus());
    EXPECT_FALSE(pure.exact);
    EXPECT_NEAR(pure.reflection_min_eig, -0.5, 1e-12);

    // Spectrum (0.55, 0.15, 0.15, 0.15): purity 0.37 passes the bound, the reflection does not.
    Eigen::VectorXd d(4);
    d << 0.55, 0.15, 0.15, 0.15;
    const CMatrix u = random_unitary(4, 5);
    const DensityState rho(CMatrix(u * d.cast<Complex>().asDiagonal() * u.adjoint()));
    const auto r = total_reflection_feasible(rho);
    EXPECT_TRUE(r.purity_bound);
    EXPECT_TRUE(r.rank_bound);
    EXPECT_FALSE(r.exact);
    EXPECT_FALSE(r.sufficient);
    EXPECT_NEAR(r.reflection_min_eig, -0.05, 1e-12);
}

TEST(Complement, MixesToMaximallyMixed) {
    const DensityState rho = random_density(3, MixedDirichlet{}, 4);
    const CMatrix mid = 0.5 * (rho.matrix() + complement(rho).matrix());
    EXPECT_LT((mid - maximally_mixed(3).matrix()).cwiseAbs().maxCoeff(), 1e-15);
}
