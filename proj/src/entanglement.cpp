#include "qreflect/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qreflect/errors.hpp"
#include "qreflect/maps.hpp"
#include "qreflect/spectral.hpp"

namespace qreflect {

namespace {

void check_proper_subset(int n, QubitSet subset, const char* what) {
    if (!subset.fits(n)) throw DimensionError(std::string(what) + ": subset " + subset.label() + " exceeds the state");
    if (subset.empty() || subset == QubitSet::all(n)) {
        throw ArgumentError(std::string(what) + " needs a nonempty proper subset of the qubits");
    }
}

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

}  // namespace

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::SeparableConsistent: return "separable-consistent";
        case Verdict::Entangled: return "entangled";
        case Verdict::Infeasible: return "infeasible";
        case Verdict::Feasible: return "feasible";
    }
    return "unknown";
}

CriterionReport ppt_test(const HermitianOperator& rho, QubitSet subset, double tol) {
    check_proper_subset(rho.qubits(), subset, "ppt_test");
    const HermitianOperator transposed = apply_mask(mask_partial_transpose(rho.qubits(), subset), rho);
    const double witness = min_eig(transposed);
    return {"ppt", witness < -tol ? Verdict::Entangled : Verdict::SeparableConsistent, witness, subset, tol, {}};
}

double ccn(const HermitianOperator& rho, QubitSet party) {
    const int n = rho.qubits();
    check_proper_subset(n, party, "ccn");
    std::vector<int> order = party.members();
    for (int q : party.complement(n).members()) order.push_back(q);
    const CMatrix grouped = permute_qubits(rho.matrix(), n, order);
    const std::int64_t dim_a = std::int64_t{1} << party.size();
    const std::int64_t dim_b = hilbert_dim(n) / dim_a;
    return sum(svd_values(choi_reshuffle(grouped, dim_a, dim_b)));
}

CriterionReport ccn_test(const HermitianOperator& rho, QubitSet party, double tol) {
    const double xi = ccn(rho, party);
    return {"ccn", xi > 1.0 + tol ? Verdict::Entangled : Verdict::SeparableConsistent, xi, party, tol, {}};
}

double ccn_via_stokes(const StokesTensor& s) {
    if (s.qubits() != 2) throw DimensionError("ccn_via_stokes needs two qubits");
    return 0.5 * sum(svd_values(stokes_as_matrix(s)));
}

double concurrence(const DensityState& rho) {
    if (rho.qubits() != 2) throw DimensionError("concurrence needs two qubits");
    // eig(rho rho') equals eig(sqrt(rho) rho' sqrt(rho)), which is Hermitian.
    const Spectrum sp = eig_hermitian(rho.matrix(), true);
    Eigen::VectorXd root(4);
    for (int i = 0; i < 4; ++i) root[i] = std::sqrt(std::max(sp.eigenvalues[i], 0.0));
    const CMatrix& v = *sp.eigenvectors;
    const CMatrix sqrt_rho = v * root.cast<Complex>().asDiagonal() * v.adjoint();
    const CMatrix product = sqrt_rho * spin_flipped_partner(rho).matrix() * sqrt_rho;

    std::vector<double> nu = eig_hermitian(product, false, 1e-8).eigenvalues;
    for (double& x : nu) x = std::sqrt(std::max(x, 0.0));
    std::sort(nu.begin(), nu.end(), std::greater<>());
    return std::max(0.0, nu[0] - nu[1] - nu[2] - nu[3]);
}

double lorentz_metric(const StokesTensor& s) {
    if (s.qubits() != 2) throw DimensionError("lorentz_metric needs two qubits");
    double local = 0.0;
    double correlation = 0.0;
    for (int j = 1; j <= 3; ++j) {
        local += s[j] * s[j] + s[4 * j] * s[4 * j];
        for (int k = 1; k <= 3; ++k) correlation += s[4 * j + k] * s[4 * j + k];
    }
    return s[0] * s[0] - local + correlation;
}

CriterionReport reduction_criterion(const HermitianOperator& rho, QubitSet traced, double tol) {
    const int n = rho.qubits();
    check_proper_subset(n, traced, "reduction_criterion");
    const CMatrix out = replace_with_identity(rho.matrix(), n, traced) - rho.matrix();
    const double witness = min_eig(out);
    return {"reduction",
            witness < -tol ? Verdict::Entangled : Verdict::SeparableConsistent,
            witness,
            traced,
            tol,
            {{"output_trace", out.trace().real()}}};
}

FeasibilityReport total_reflection_feasible(const HermitianOperator& rho, double tol) {
    const int n = rho.qubits();
    const double bound = std::pow(2.0, 1 - n);
    const std::vector<double> ev = eig_hermitian(rho).eigenvalues;

    FeasibilityReport out{};
    out.max_eig = ev.front();
    out.purity = std::inner_product(ev.begin(), ev.end(), ev.begin(), 0.0);
    out.rank = static_cast<int>(std::count_if(ev.begin(), ev.end(), [](double l) { return std::abs(l) > 1e-9; }));
    out.reflection_min_eig = min_eig(complement(rho));
    out.sufficient = out.max_eig <= bound + tol;
    out.exact = out.reflection_min_eig >= -tol;
    out.purity_bound = out.purity <= bound + 1e-12;
    out.rank_bound = out.rank >= (1 << (n - 1));
    out.report = {"total_reflection",
                  out.exact ? Verdict::Feasible : Verdict::Infeasible,
                  out.reflection_min_eig,
                  QubitSet::all(n),
                  tol,
                  {{"sufficient", out.sufficient ? 1.0 : 0.0},
                   {"exact", out.exact ? 1.0 : 0.0},
                   {"purity_bound", out.purity_bound ? 1.0 : 0.0},
                   {"rank_bound", out.rank_bound ? 1.0 : 0.0},
                   {"max_eig", out.max_eig},
                   {"purity", out.purity},
                   {"rank", static_cast<double>(out.rank)}}};
    return out;
}

HermitianOperator complement(const HermitianOperator& rho) {
    const int n = rho.qubits();
    return HermitianOperator(std::pow(2.0, 1 - n) * CMatrix::Identity(rho.dim(), rho.dim()) - rho.matrix());
}

}  // namespace qreflect
