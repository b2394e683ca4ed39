#include "qreflect/commands.hpp"
#include "qreflect/entanglement.hpp"
#include "qreflect/spectral.hpp"
#include "qreflect/states.hpp"

namespace qreflect::commands {

nlohmann::json upb_demo(double tol) {
    static constexpr const char* kLabels[4] = {"01+", "1+0", "+01", "---"};

    const DensityState separable = upb_separable();
    const HermitianOperator reflected = complement(separable);
    const double reflected_min = min_eig(reflected);
    const bool is_density = reflected_min >= -tol;

    nlohmann::json j;
    j["tolerance"] = tol;
    j["separable_spectrum"] = eig_hermitian(separable).eigenvalues;
    j["separable_purity"] = purity(to_stokes(separable));
    j["feasibility"] = feasibility_to_json(total_reflection_feasible(separable, tol));
    j["reflection_min_eig"] = reflected_min;
    j["reflection_is_density"] = is_density;
    j["reflection_rank"] = rank(reflected);

    nlohmann::json cuts = nlohmann::json::array();
    bool all_ppt = true;
    for (int q = 0; q < 3; ++q) {
        const auto report = ppt_test(reflected, QubitSet{q}, tol);
        all_ppt = all_ppt && report.verdict == Verdict::SeparableConsistent;
        cuts.push_back(report_to_json(report));
    }
    j["ppt_cuts"] = std::move(cuts);
    j["all_cuts_ppt"] = all_ppt;

    // Reported for reference only; no expectation is attached to these values.
    nlohmann::json cross_norms = nlohmann::json::array();
    for (int q = 0; q < 3; ++q) cross_norms.push_back(report_to_json(ccn_test(reflected, QubitSet{q}, tol)));
    j["ccn_cuts"] = std::move(cross_norms);

    nlohmann::json components = nlohmann::json::array();
    bool none_alone = true;
    const auto kets = upb_kets();
    for (int k = 0; k < 4; ++k) {
        const DensityState projector = pure_state(kets[k]);
        const double m = min_eig(complement(projector));
        const bool density = m >= -tol;
        none_alone = none_alone && !density;
        const Complex overlap = kets[k].adjoint() * reflected.matrix() * kets[k];
        components.push_back({{"ket", kLabels[k]},
                              {"reflection_min_eig", m},
                              {"reflection_is_density", density},
                              {"overlap_with_bound_state", overlap.real()}});
    }
    j["components"] = std::move(components);
    j["no_component_reflects_to_density"] = none_alone;
    j["verdict"] = is_density && all_ppt && none_alone ? "reflection is a PPT density; no single component reflects to a density"
                                                       : "chain broken";
    return j;
}

}  // namespace qreflect::commands
