#pragma once

// Reference computations that share no code with the library: explicit
// Pauli matrices, a hand-rolled Kronecker product, index-loop partial
// traces and the Faddeev-LeVerrier characteristic polynomial.

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using C = std::complex<double>;
using M = Eigen::MatrixXcd;

inline M pauli(int j) {
    M p(2, 2);
    switch (j) {
        case 0: p << 1, 0, 0, 1; break;
        case 1: p << 0, 1, 1, 0; break;
        case 2: p << 0, C(0, -1), C(0, 1), 0; break;
        default: p << 1, 0, 0, -1; break;
    }
    return p;
}

inline M kron(const M& a, const M& b) {
    M out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

// Lambda for base-4 digits, leftmost digit first.
inline M lambda(const std::vector<int>& digits) {
    M out = M::Identity(1, 1);
    for (int d : digits) out = kron(out, pauli(d) / std::sqrt(2.0));
    return out;
}

inline std::vector<int> digits_of(int n, long linear) {
    std::vector<int> d(n);
    for (int m = n - 1; m >= 0; --m, linear /= 4) d[m] = static_cast<int>(linear % 4);
    return d;
}

inline std::vector<double> stokes(const M& rho, int n) {
    std::vector<double> s;
    for (long i = 0; i < (1L << (2 * n)); ++i) s.push_back((rho * lambda(digits_of(n, i))).trace().real());
    return s;
}

// Traces out the single qubit `q` of an n-qubit matrix.
inline M trace_out(const M& rho, int n, int q) {
    const int dim = 1 << n;
    const int bit = n - 1 - q;
    M out = M::Zero(dim / 2, dim / 2);
    auto squeeze = [&](int x) { return ((x >> (bit + 1)) << bit) | (x & ((1 << bit) - 1)); };
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            if (((r >> bit) & 1) == ((c >> bit) & 1)) out(squeeze(r), squeeze(c)) += rho(r, c);
    return out;
}

// Partial transpose of qubit q by explicit index swap.
inline M partial_transpose(const M& rho, int n, int q) {
    const int dim = 1 << n;
    const int bit = 1 << (n - 1 - q);
    M out(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) {
            const int rb = r & bit, cb = c & bit;
            out((r & ~bit) | cb, (c & ~bit) | rb) = rho(r, c);
        }
    return out;
}

// Coefficients c[0..d] of det(x I - A) = sum_k c[k] x^(d-k), c[0] = 1.
inline std::vector<C> characteristic_polynomial(const M& a) {
    const long d = a.rows();
    std::vector<C> c(d + 1);
    c[0] = 1.0;
    M m = M::Zero(d, d);
    for (long k = 1; k <= d; ++k) {
        m = a * m + c[k - 1] * M::Identity(d, d);
        c[k] = -(a * m).trace() / static_cast<double>(k);
    }
    return c;
}

// Polynomial with the given roots, same layout as above.
inline std::vector<C> poly_from_roots(const std::vector<double>& roots) {
    std::vector<C> c{1.0};
    for (double r : roots) {
        std::vector<C> next(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i] += c[i];
            next[i + 1] -= r * c[i];
        }
        c = next;
    }
    return c;
}

inline double max_gap(const std::vector<C>& a, const std::vector<C>& b) {
    double g = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) g = std::max(g, std::abs(a[i] - b[i]));
    return g;
}

}  // namespace oracle
