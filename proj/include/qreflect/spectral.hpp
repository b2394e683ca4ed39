#pragma once

#include <optional>
#include <vector>

#include "qreflect/linalg.hpp"
#include "qreflect/repr.hpp"

namespace qreflect {

struct Spectrum {
    std::vector<double> eigenvalues;      // descending
    std::optional<CMatrix> eigenvectors;  // columns, same order as eigenvalues
};

/// Dense Hermitian eigendecomposition. Input is symmetrized before the solve;
/// throws ArgumentError if it is further than `tol` from Hermitian.
Spectrum eig_hermitian(const CMatrix& h, bool with_vectors = false, double tol = kHermitianTol);
Spectrum eig_hermitian(const HermitianOperator& h, bool with_vectors = false);

/// Singular values, descending.
std::vector<double> svd_values(const RMatrix& m);
std::vector<double> svd_values(const CMatrix& m);

double min_eig(const CMatrix& h);
double max_eig(const CMatrix& h);
/// min_eig(h) >= -tol.
bool is_psd(const CMatrix& h, double tol = kPsdTol);
/// Number of eigenvalues with |lambda| > tol.
int rank(const CMatrix& h, double tol = 1e-9);

inline double min_eig(const HermitianOperator& h) { return min_eig(h.matrix()); }
inline double max_eig(const HermitianOperator& h) { return max_eig(h.matrix()); }
inline bool is_psd(const HermitianOperator& h, double tol = kPsdTol) { return is_psd(h.matrix(), tol); }
inline int rank(const HermitianOperator& h, double tol = 1e-9) { return rank(h.matrix(), tol); }

}  // namespace qreflect
