#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qreflect/commands.hpp"
#include "qreflect/entanglement.hpp"
#include "qreflect/maps.hpp"
#include "qreflect/spectral.hpp"
#include "qreflect/states.hpp"

namespace qreflect::commands {

namespace {

struct Failure {
    std::string detail;
    std::optional<HermitianOperator> state;
};

using Check = std::function<std::optional<Failure>(std::uint64_t seed, int trial, Fault fault)>;

struct Invariant {
    const char* name;
    Check check;
};

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

std::string describe(const char* what, double value, double bound) {
    std::ostringstream os;
    os.precision(17);
    os << what << ": " << value << " exceeds " << bound;
    return os.str();
}

std::optional<Failure> fail_if(bool bad, const char* what, double value, double bound, const HermitianOperator& state) {
    if (!bad) return std::nullopt;
    return Failure{describe(what, value, bound), state};
}

std::vector<SignMask> named_masks(int n) {
    std::vector<SignMask> out;
    const QubitSet all = QubitSet::all(n);
    for (std::uint32_t m = 1; m <= all.mask(); ++m) {
        const QubitSet s = QubitSet::from_mask(m);
        out.push_back(mask_partial_transpose(n, s));
        out.push_back(mask_spin_flip(n, s));
        out.push_back(mask_total_reflection(n, s));
    }
    if (n == 2) {
        out.push_back(mask_composite_c());
        out.push_back(choi_related_mask_pair().first);
    }
    return out;
}

SignMask corrupted(const SignMask& mask) {
    auto signs = mask.signs();
    signs.back() = static_cast<std::int8_t>(-signs.back());
    return SignMask(mask.qubits(), std::move(signs), mask.name() + "_corrupted");
}

std::vector<double> spectrum(const HermitianOperator& h) { return eig_hermitian(h).eigenvalues; }

double spectrum_gap(const std::vector<double>& a, const std::vector<double>& b) {
    double gap = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) gap = std::max(gap, std::abs(a[i] - b[i]));
    return gap;
}

std::vector<Invariant> invariants() {
    std::vector<Invariant> list;

    list.push_back({"repr.round_trip", [](std::uint64_t seed, int trial, Fault) -> std::optional<Failure> {
        const int n = 1 + trial % 3;
        const DensityState rho = random_density(n, MixedDirichlet{}, seed);
        const double err = max_abs(from_stokes(to_stokes(rho)).matrix() - rho.matrix());
        return fail_if(err > 1e-12, "from_stokes(to_stokes(rho)) - rho", err, 1e-12, rho);
    }});

    list.push_back({"repr.norm_bridge", [](std::uint64_t seed, int trial, Fault) -> std::optional<Failure> {
        const int n = 1 + trial % 3;
        const DensityState rho = random_density(n, MixedDirichlet{}, seed);
        const double lhs = to_real_density(to_stokes(rho)).matrix().norm() / std::pow(2.0, 0.5 * n);
        const double err = std::abs(lhs - rho.matrix().norm());
        return fail_if(err > 1e-12, "|sigma|/2^(n/2) - |rho|", err, 1e-12, rho);
    }});

    list.push_back({"repr.one_qubit_spectrum", [](std::uint64_t seed, int, Fault) -> std::optional<Failure> {
        const DensityState rho = random_density(1, MixedDirichlet{}, seed);
        const StokesTensor s = to_stokes(rho);
        const double r = std::sqrt(s[1] * s[1] + s[2] * s[2] + s[3] * s[3]);
        const double h = 1.0 / std::sqrt(2.0);
        const auto ev = spectrum(rho);
        const double err = std::max(std::abs(ev[0] - h * (h + r)), std::abs(ev[1] - h * (h - r)));
        return fail_if(err > 1e-12, "one-qubit eigenvalue formula", err, 1e-12, rho);
    }});

    list.push_back({"repr.partial_trace_dual_path", [](std::uint64_t seed, int trial, Fault) -> std::optional<Failure> {
        const DensityState rho = random_density(3, MixedDirichlet{}, seed);
        const QubitSet keep = QubitSet::from_mask(1u + static_cast<std::uint32_t>(trial % 6));
        const CMatrix stokes_path = from_stokes(partial_trace(to_stokes(rho), keep)).matrix();
        const double err = max_abs(stokes_path - partial_trace(rho, keep).matrix());
        return fail_if(err > 1e-12, "Stokes vs Hermitian partial trace", err, 1e-12, rho);
    }});

    list.push_back({"maps.involution", [](std::uint64_t seed, int trial, Fault fault) -> std::optional<Failure> {
        const int n = 2 + trial % 2;
        const DensityState rho = random_density(n, MixedDirichlet{}, seed);
        const StokesTensor s = to_stokes(rho);
        for (const SignMask& mask : named_masks(n)) {
            const SignMask& second = fault == Fault::MaskSign ? corrupted(mask) : mask;
            const StokesTensor twice = apply_mask(second, apply_mask(mask, s));
            if (!std::equal(twice.values().begin(), twice.values().end(), s.values().begin())) {
                return Failure{"mask " + second.name() + " is not an involution", HermitianOperator(rho)};
            }
        }
        return std::nullopt;
    }});

    list.push_back({"maps.trace_norm_inner_product", [](std::uint64_t seed, int trial, Fault) -> std::optional<Failure> {
        const int n = 2 + trial % 2;
        const DensityState a = random_density(n, MixedDirichlet{}, seed);
        const DensityState b = random_density(n, MixedDirichlet{}, derive_seed(seed, 7));
        const double inner = hs_inner(a.matrix(), b.matrix()).real();
        const double pa = purity(to_stokes(a));
        for (const SignMask& mask : named_masks(n)) {
            const HermitianOperator ma = apply_mask(mask, a);
            const HermitianOperator mb = apply_mask(mask, b);
            const double err = std::max({std::abs(ma.matrix().trace().real() - 1.0),
                                         std::abs(purity(to_stokes(ma)) - pa),
                                         std::abs(hs_inner(ma.matrix(), mb.matrix()).real() - inner)});
            if (err > 1e-12) return Failure{describe(("mask " + mask.name()).c_str(), err, 1e-12), HermitianOperator(a)};
        }
        return std::nullopt;
    }});

    list.push_back({"maps.total_reflection_pure_spectrum", [](std::uint64_t seed, int, Fault) -> std::optional<Failure> {
        const DensityState rho = random_density(2, HaarPure{}, seed);
        const auto ev = spectrum(apply_mask(mask_total_reflection(2, QubitSet{0, 1}), rho));
        const double err = spectrum_gap(ev, {0.5, 0.5, 0.5, -0.5});
        return fail_if(err > 1e-10, "total reflection of a pure state", err, 1e-10, rho);
    }});

    list.push_back({"maps.unitary_commutation", [](std::uint64_t seed, int trial, Fault) -> std::optional<Failure> {
        const int n = 2 + trial % 2;
        const DensityState rho = random_density(n, MixedDirichlet{}, seed);
        const CMatrix u = random_unitary(hilbert_dim(n), derive_seed(seed, 3));
        const SignMask total = mask_total_reflection(n, QubitSet::all(n));
        const HermitianOperator rotated(u * rho.matrix() * u.adjoint());
        const CMatrix lhs = apply_mask(total, rotated).matrix();
        const CMatrix rhs = u * apply_mask(total, rho).matrix() * u.adjoint();
        const double err = max_abs(lhs - rhs);
        return fail_if(err > 1e-10, "R(U rho U^dag) - U R(rho) U^dag", err, 1e-10, rho);
    }});

    list.push_back({"maps.local_reflection_class", [](std::uint64_t seed, int, Fault) -> std::optional<Failure> {
        const DensityState rho = random_density(2, MixedDirichlet{}, seed);
        const auto map = LocalOrthogonalMap::identity(2).with_rotation(0, random_reflection(derive_seed(seed, 5)));
        const auto a = spectrum(apply_local_orthogonal(map, rho));
        const auto b = spectrum(apply_mask(mask_partial_transpose(2, QubitSet{0}), rho));
        const double err = spectrum_gap(a, b);
        return fail_if(err > 1e-9, "O-(3) reflection vs transpose spectra", err, 1e-9, rho);
    }});

    list.push_back({"maps.operator_sum_paths", [](std::uint64_t seed, int, Fault) -> std::optional<Failure> {
        const DensityState q = random_density(1, MixedDirichlet{}, seed);
        const DensityState rho = random_density(2, MixedDirichlet{}, derive_seed(seed, 11));
        const double err = std::max({
            max_abs(operator_sum_onequbit(OneQubitMap::Transpose, q).matrix() -
                    apply_mask(mask_partial_transpose(1, QubitSet{0}), q).matrix()),
            max_abs(operator_sum_onequbit(OneQubitMap::SpinFlip, q).matrix() -
                    apply_mask(mask_spin_flip(1, QubitSet{0}), q).matrix()),
            max_abs(composite_c_operator_sum(rho).matrix() - apply_mask(mask_composite_c(), rho).matrix()),
            max_abs(spin_flipped_partner(rho).matrix() - apply_mask(mask_spin_flip(2, QubitSet{0, 1}), rho).matrix()),
        });
        return fail_if(err > 1e-12, "operator sum vs mask path", err, 1e-12, rho);
    }});

    list.push_back({"spectral.unitary_invariance", [](std::uint64_t seed, int trial, Fault) -> std::optional<Failure> {
        const int n = 1 + trial % 3;
        const DensityState rho = random_density(n, MixedDirichlet{}, seed);
        const HermitianOperator h = apply_mask(mask_total_reflection(n, QubitSet::all(n)), rho);
        const CMatrix u = random_unitary(hilbert_dim(n), derive_seed(seed, 13));
        const double err = spectrum_gap(spectrum(h), eig_hermitian(CMatrix(u * h.matrix() * u.adjoint())).eigenvalues);
        return fail_if(err > 1e-9, "eig(U H U^dag) - eig(H)", err, 1e-9, rho);
    }});

    list.push_back({"entanglement.ppt_product_mixtures", [](std::uint64_t seed, int trial, Fault) -> std::optional<Failure> {
        const DensityState rho = random_product_mixture(2, 1 + trial % 6, seed);
        for (int q = 0; q < 2; ++q) {
            const auto report = ppt_test(rho, QubitSet{q});
            if (report.verdict != Verdict::SeparableConsistent) {
                return Failure{describe("PPT witness of a separable mixture", -report.witness, report.tolerance),
                               HermitianOperator(rho)};
            }
        }
        return std::nullopt;
    }});

    list.push_back({"entanglement.total_reflection_feasibility", [](std::uint64_t seed, int trial, Fault) -> std::optional<Failure> {
        const int n = 2 + trial % 2;
        const DensityState rho = random_density(n, BoundedSpectrum{std::pow(2.0, 1 - n)}, seed);
        const auto r = total_reflection_feasible(rho);
        if (!r.sufficient || !r.exact || !r.purity_bound || !r.rank_bound) {
            return Failure{describe("reflection min eig below zero or bounds violated", -r.reflection_min_eig, 1e-10),
                           HermitianOperator(rho)};
        }
        return std::nullopt;
    }});

    list.push_back({"entanglement.ccn_dual_path", [](std::uint64_t seed, int, Fault) -> std::optional<Failure> {
        const DensityState rho = random_density(2, MixedDirichlet{}, seed);
        const double err = std::abs(ccn_via_stokes(to_stokes(rho)) - ccn(rho, QubitSet{0}));
        return fail_if(err > 1e-10, "Stokes vs realigned CCN", err, 1e-10, rho);
    }});

    list.push_back({"entanglement.ccn_triangle", [](std::uint64_t seed, int trial, Fault) -> std::optional<Failure> {
        const DensityState rho = random_product_mixture(2, 1 + trial % 5, seed);
        const double xi = ccn(rho, QubitSet{0});
        return fail_if(xi > 1.0 + 1e-10, "CCN of a separable mixture", xi, 1.0 + 1e-10, rho);
    }});

    list.push_back({"entanglement.lorentz_dual_path", [](std::uint64_t seed, int, Fault) -> std::optional<Failure> {
        const DensityState rho = random_density(2, MixedDirichlet{}, seed);
        const double direct = (rho.matrix() * spin_flipped_partner(rho).matrix()).trace().real();
        const double err = std::abs(lorentz_metric(to_stokes(rho)) - direct);
        return fail_if(err > 1e-12, "Lorentz form vs tr(rho rho')", err, 1e-12, rho);
    }});

    list.push_back({"entanglement.complement_identity", [](std::uint64_t seed, int trial, Fault) -> std::optional<Failure> {
        const int n = 1 + trial % 4;
        const DensityState rho = random_density(n, MixedDirichlet{}, seed);
        const CMatrix mix = 0.5 * (rho.matrix() + complement(rho).matrix());
        const double err = max_abs(mix - CMatrix::Identity(rho.dim(), rho.dim()) / static_cast<double>(rho.dim()));
        return fail_if(err > 1e-14, "(rho + complement)/2 - 1/2^n", err, 1e-14, rho);
    }});

    list.push_back({"maps.relaxed_reflection_positive", [](std::uint64_t seed, int trial, Fault) -> std::optional<Failure> {
        const DensityState rho = trial % 2 ? random_density(2, HaarPure{}, seed) : random_density(2, MixedDirichlet{}, seed);
        const double m = min_eig(relaxed_reflection(rho, QubitSet{0, 1}));
        return fail_if(m < -1e-10, "negative relaxed-reflection eigenvalue", -m, 1e-10, rho);
    }});

    return list;
}

}  // namespace

PropertyResult property_suite(const PropertyOptions& options) {
    const auto list = invariants();
    const int trials = options.trials;
    nlohmann::json summary = nlohmann::json::array();
    std::optional<nlohmann::json> counterexample;

    for (std::size_t k = 0; k < list.size(); ++k) {
        const Invariant& inv = list[k];
        std::vector<std::optional<Failure>> results(trials);
        const std::uint64_t stream = derive_seed(options.seed, k);
        if (options.execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 8)
            for (int t = 0; t < trials; ++t) results[t] = inv.check(derive_seed(stream, t), t, options.fault);
        } else {
            for (int t = 0; t < trials; ++t) results[t] = inv.check(derive_seed(stream, t), t, options.fault);
        }

        int failures = 0;
        for (int t = 0; t < trials; ++t) {
            if (!results[t]) continue;
            ++failures;
            if (!counterexample) {
                nlohmann::json c;
                c["invariant"] = inv.name;
                c["trial"] = t;
                c["trial_seed"] = derive_seed(stream, t);
                c["detail"] = results[t]->detail;
                if (results[t]->state) c["state"] = state_to_json(*results[t]->state, StateFormat::Hermitian);
                counterexample = std::move(c);
            }
        }
        summary.push_back({{"name", inv.name}, {"trials", trials}, {"failures", failures}, {"passed", failures == 0}});
    }

    nlohmann::json report;
    report["seed"] = options.seed;
    report["trials"] = trials;
    report["fault"] = options.fault == Fault::MaskSign ? "mask-sign" : "none";
    report["invariants"] = std::move(summary);
    report["passed"] = !counterexample.has_value();
    if (counterexample) report["counterexample"] = std::move(*counterexample);
    return {!counterexample.has_value(), std::move(report)};
}

}  // namespace qreflect::commands
