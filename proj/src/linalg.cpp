#include "qreflect/linalg.hpp"

namespace qreflect {

namespace {

template <typename M>
M kron_impl(const M& a, const M& b) {
    M out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

}  // namespace

CMatrix kron(const CMatrix& a, const CMatrix& b) { return kron_impl(a, b); }
RMatrix kron(const RMatrix& a, const RMatrix& b) { return kron_impl(a, b); }

bool is_hermitian(const CMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

CMatrix hermitian_part(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

Complex hs_inner(const CMatrix& a, const CMatrix& b) { return (a.adjoint() * b).trace(); }

int qubits_for_dim(std::int64_t dim) {
    if (dim < 2) return -1;
    int n = 0;
    while ((std::int64_t{1} << n) < dim) ++n;
    return (std::int64_t{1} << n) == dim ? n : -1;
}

}  // namespace qreflect
