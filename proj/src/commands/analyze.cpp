#include "qreflect/commands.hpp"
#include "qreflect/entanglement.hpp"
#include "qreflect/errors.hpp"
#include "qreflect/maps.hpp"
#include "qreflect/spectral.hpp"

namespace qreflect::commands {

namespace {

void require_fit(QubitSet subset, int n, const char* flag) {
    if (!subset.fits(n)) {
        throw DimensionError(std::string(flag) + " " + subset.label() + " does not fit a " + std::to_string(n) +
                             "-qubit state");
    }
}

QubitSet leading_half(int n) {
    QubitSet party;
    for (int q = 0; q < n / 2; ++q) party = QubitSet::from_mask(party.mask() | (1u << q));
    return party;
}

}  // namespace

nlohmann::json analyze(const StateFile& state, const AnalyzeRequest& request, double tol) {
    const HermitianOperator& rho = state.op;
    const int n = rho.qubits();
    nlohmann::json j;
    j["n"] = n;
    j["tolerance"] = tol;
    if (state.seed) j["seed"] = *state.seed;
    nlohmann::json reports = nlohmann::json::array();

    if (request.ppt) {
        require_fit(*request.ppt, n, "--ppt");
        if (request.ppt->empty() || *request.ppt == QubitSet::all(n)) {
            throw DimensionError("--ppt needs a nonempty proper subset for a " + std::to_string(n) + "-qubit state");
        }
        reports.push_back(report_to_json(ppt_test(rho, *request.ppt, tol)));
    }
    if (request.ccn) {
        if (n < 2) throw DimensionError("--ccn needs at least two qubits");
        const QubitSet party = leading_half(n);
        auto report = ccn_test(rho, party, tol);
        if (n == 2) report.details.emplace_back("stokes_path", ccn_via_stokes(to_stokes(rho)));
        reports.push_back(report_to_json(report));
    }
    if (request.concurrence) {
        if (n != 2) throw DimensionError("--concurrence needs a two-qubit state");
        const DensityState density(rho);
        nlohmann::json c;
        c["criterion"] = "concurrence";
        c["witness"] = concurrence(density);
        c["lorentz_metric"] = lorentz_metric(to_stokes(rho));
        reports.push_back(std::move(c));
    }
    if (request.reflect) {
        require_fit(*request.reflect, n, "--reflect");
        if (request.reflect->empty()) throw DimensionError("--reflect needs at least one qubit");
        const SignMask mask = mask_total_reflection(n, *request.reflect);
        const HermitianOperator reflected = apply_mask(mask, rho);
        const double witness = min_eig(reflected);
        CriterionReport report{"reflection", witness < -tol ? Verdict::Infeasible : Verdict::Feasible, witness,
                               *request.reflect, tol, {}};
        report.details.emplace_back("purity_before", purity(to_stokes(rho)));
        report.details.emplace_back("purity_after", purity(to_stokes(reflected)));
        report.details.emplace_back("sign_changes", classify(mask).sign_change_count);
        reports.push_back(report_to_json(report));
    }
    if (request.feasible) {
        reports.push_back(feasibility_to_json(total_reflection_feasible(rho, tol)));
    }
    if (request.reduction) {
        require_fit(*request.reduction, n, "--reduction");
        if (request.reduction->empty() || *request.reduction == QubitSet::all(n)) {
            throw DimensionError("--reduction needs a nonempty proper subset for a " + std::to_string(n) + "-qubit state");
        }
        reports.push_back(report_to_json(reduction_criterion(rho, *request.reduction, tol)));
    }
    j["reports"] = std::move(reports);
    return j;
}

}  // namespace qreflect::commands
