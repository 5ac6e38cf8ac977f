#ifndef NSCHUR_SYMPLECTIC_LANCZOS_HPP
#define NSCHUR_SYMPLECTIC_LANCZOS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "nschur/dense_matrix.hpp"
#include "nschur/kernel_provider.hpp"

namespace nschur {

// 2m x 2m symmetric matrix [W -X; X W] with W symmetric and X skew-symmetric.
// Every eigenvalue of such a matrix has even multiplicity.
struct WXMatrix {
    int m = 0;
    DenseMatrix w;  // m x m symmetric
    DenseMatrix x;  // m x m skew-symmetric

    DenseMatrix dense() const;  // assembles the 2m x 2m matrix
};

// Result of the m-step Lanczos diagonalization.
//
// m_basis is orthogonal symplectic with A = m_basis blkdiag(T, T) m_basis^T,
// T tridiagonal symmetric; (z, d) is the EVD of T, so
// R = m_basis * blkdiag(z, z) satisfies A = R blkdiag(D, D) R^T.
//
// The scheme is experimental: orthogonality of the basis degrades in floating
// point. `degraded` is set when ||M^T M - I||_F / sqrt(2m) > 1e-6.
struct WXEigenResult {
    DenseMatrix m_basis;    // 2m x 2m
    DenseMatrix z;          // m x m, EVD of T
    std::vector<double> d;  // length m, descending
    bool degraded = false;

    DenseMatrix r() const;  // m_basis * blkdiag(z, z)
};

// Lanczos tridiagonalization of [W -X; X W] stopped after m steps, with full
// (two-pass) Gram-Schmidt reorthogonalization. Requires rank 2m and all
// eigenvalue multiplicities equal to 2; violations surface as BreakdownError
// after 3 restarts with fresh random vectors.
WXEigenResult wx_eigen(const WXMatrix& a, const KernelProvider& kp, std::mt19937_64& rng);

} // namespace nschur

#endif
