// Regenerates tests/fixtures. Usage: qreflect_fixtures <dir> [seed]

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "qreflect/entanglement.hpp"
#include "qreflect/io.hpp"
#include "qreflect/states.hpp"

using namespace qreflect;

namespace {

// First sampled two-qubit state whose purity is within the feasibility
// bound while its total reflection is not positive.
std::pair<DensityState, std::uint64_t> purity_counterexample(std::uint64_t seed) {
    for (std::uint64_t i = 0;; ++i) {
        const std::uint64_t s = derive_seed(seed, i);
        DensityState rho = random_density(2, MixedDirichlet{}, s);
        const auto r = total_reflection_feasible(rho);
        if (r.purity_bound && !r.exact && r.reflection_min_eig < -1e-3) return {std::move(rho), s};
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: qreflect_fixtures <dir> [seed]\n";
        return 64;
    }
    const std::filesystem::path dir = argv[1];
    const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 2024;
    std::filesystem::create_directories(dir);

    write_state_file(dir / "bell.json", bell_phi_plus(), StateFormat::Hermitian);
    write_state_file(dir / "bell_stokes.json", bell_phi_plus(), StateFormat::Stokes);
    write_state_file(dir / "product.json", pure_state("0+"), StateFormat::Hermitian);
    write_state_file(dir / "maximally_mixed_2.json", maximally_mixed(2), StateFormat::Hermitian);
    write_state_file(dir / "upb_sep.json", upb_separable(), StateFormat::Hermitian);

    const auto [rho, s] = purity_counterexample(seed);
    write_state_file(dir / "purity_counterexample.json", rho, StateFormat::Hermitian, s);

    nlohmann::json gram = nlohmann::json::array();
    const auto kets = upb_kets();
    for (const auto& a : kets) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& b : kets) row.push_back(a.dot(b).real());
        gram.push_back(std::move(row));
    }
    std::ofstream(dir / "upb_gram.json") << nlohmann::json{{"kets", {"01+", "1+0", "+01", "---"}}, {"gram", gram}}.dump(2) << '\n';

    std::ofstream(dir / "malformed.json") << "{\"n\": 2, \"format\": \"hermitian\", \"re\": [[1, 0], \n";
    std::ofstream(dir / "wrong_dimension.json")
        << "{\"n\": 2, \"format\": \"hermitian\", \"re\": [[1, 0], [0, 0]], \"im\": [[0, 0], [0, 0]]}\n";
    std::ofstream(dir / "not_hermitian.json")
        << "{\"n\": 1, \"format\": \"hermitian\", \"re\": [[0.5, 0.3], [0.1, 0.5]]}\n";
    return 0;
}
