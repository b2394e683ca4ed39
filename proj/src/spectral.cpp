#include "qreflect/spectral.hpp"

#include <algorithm>

#include "qreflect/errors.hpp"

namespace qreflect {

Spectrum eig_hermitian(const CMatrix& h, bool with_vectors, double tol) {
    if (h.rows() != h.cols()) throw ArgumentError("eigendecomposition needs a square matrix");
    if (!is_hermitian(h, tol)) throw ArgumentError("matrix is not Hermitian within tolerance");
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part(h),
                                                  with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw ArgumentError("eigensolver did not converge");

    // Eigen returns ascending order.
    const Eigen::Index d = h.rows();
    Spectrum out;
    out.eigenvalues.resize(d);
    for (Eigen::Index i = 0; i < d; ++i) out.eigenvalues[i] = solver.eigenvalues()(d - 1 - i);
    if (with_vectors) out.eigenvectors = solver.eigenvectors().rowwise().reverse();
    return out;
}

Spectrum eig_hermitian(const HermitianOperator& h, bool with_vectors) {
    return eig_hermitian(h.matrix(), with_vectors);
}

std::vector<double> svd_values(const RMatrix& m) {
    Eigen::JacobiSVD<RMatrix> svd(m);
    const auto& s = svd.singularValues();
    return {s.data(), s.data() + s.size()};
}

std::vector<double> svd_values(const CMatrix& m) {
    Eigen::JacobiSVD<CMatrix> svd(m);
    const auto& s = svd.singularValues();
    return {s.data(), s.data() + s.size()};
}

double min_eig(const CMatrix& h) { return eig_hermitian(h).eigenvalues.back(); }

double max_eig(const CMatrix& h) { return eig_hermitian(h).eigenvalues.front(); }

bool is_psd(const CMatrix& h, double tol) { return min_eig(h) >= -tol; }

int rank(const CMatrix& h, double tol) {
    const auto ev = eig_hermitian(h).eigenvalues;
    return static_cast<int>(std::count_if(ev.begin(), ev.end(), [tol](double l) { return std::abs(l) > tol; }));
}

}  // namespace qreflect
