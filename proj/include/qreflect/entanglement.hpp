#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qreflect/linalg.hpp"
#include "qreflect/qubits.hpp"
#include "qreflect/repr.hpp"

namespace qreflect {

enum class Verdict { SeparableConsistent, Entangled, Infeasible, Feasible };

std::string_view to_string(Verdict v);

struct CriterionReport {
    std::string criterion;
    Verdict verdict;
    double witness;
    QubitSet subset;
    double tolerance;
    // Secondary numbers (output trace, flags as 0/1, ...), in insertion order.
    std::vector<std::pair<std::string, double>> details;
};

/// Partial transpose on `subset`; witness is the minimum eigenvalue.
/// Throws ArgumentError for an empty or full subset.
CriterionReport ppt_test(const HermitianOperator& rho, QubitSet subset, double tol = kPsdTol);

/// Computable cross-norm: trace norm of the realigned matrix for the cut
/// `party | rest`. Throws ArgumentError for an empty or full party.
double ccn(const HermitianOperator& rho, QubitSet party);
CriterionReport ccn_test(const HermitianOperator& rho, QubitSet party, double tol = kPsdTol);

/// Two qubits: half the trace norm of stokes_as_matrix.
double ccn_via_stokes(const StokesTensor& s);

/// Two-qubit concurrence, max(0, nu1 - nu2 - nu3 - nu4) with nu the square
/// roots of eig(rho rho'), clamped at zero.
double concurrence(const DensityState& rho);

/// tr(rho rho') as the Lorentzian quadratic form in the Stokes components.
double lorentz_metric(const StokesTensor& s);

/// 1_traced (x) tr_traced(rho) - rho; witness is its minimum eigenvalue and
/// the output trace is reported as detail "output_trace".
CriterionReport reduction_criterion(const HermitianOperator& rho, QubitSet traced,
                                    double tol = kPsdTol);

struct FeasibilityReport {
    CriterionReport report;
    bool sufficient;    // max eig(rho) <= 2^(1-n)
    bool exact;         // total reflection is PSD
    bool purity_bound;  // tr(rho^2) <= 2^(1-n)
    bool rank_bound;    // rank(rho) >= 2^(n-1)
    double max_eig;
    double reflection_min_eig;
    double purity;
    int rank;
};

FeasibilityReport total_reflection_feasible(const HermitianOperator& rho, double tol = kPsdTol);

/// 2^(1-n) 1 - rho, the total reflection.
HermitianOperator complement(const HermitianOperator& rho);

}  // namespace qreflect
