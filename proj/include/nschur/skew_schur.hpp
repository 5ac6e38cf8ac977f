#ifndef NSCHUR_SKEW_SCHUR_HPP
#define NSCHUR_SKEW_SCHUR_HPP

#include <vector>

#include "nschur/dense_matrix.hpp"
#include "nschur/kernel_provider.hpp"

namespace nschur {

// Skew-symmetric tridiagonal matrix, stored by its subdiagonal:
// T(k+1, k) = sub[k], T(k, k+1) = -sub[k], zero elsewhere.
struct SkewTridiagonal {
    int n = 0;
    std::vector<double> sub;  // length n-1

    DenseMatrix dense() const;
};

// Rectangular upper-bidiagonal block of the even-odd permuted tridiagonal:
// floor(n/2) x ceil(n/2), diag[i] = B(i, i), super[i] = B(i, i+1).
struct RectBidiagonal {
    int rows = 0;
    int cols = 0;
    std::vector<double> diag;   // length rows
    std::vector<double> super;  // length cols-1

    DenseMatrix dense() const;
};

// Real Schur form of a skew-symmetric matrix:
//
//                       [ 0    0   -S ]
//   skew(A) = Q_hat  *  [ 0   0_r   0 ]  *  Q_hat^T,   S = diag(sigma)
//                       [ S    0    0 ]
//
// sigma strictly positive and descending; r = n - 2p is the nullity.
struct SkewSchur {
    DenseMatrix q_hat;          // n x n orthogonal
    std::vector<double> sigma;  // length p
    int r = 0;

    int p() const { return static_cast<int>(sigma.size()); }
    int n() const { return q_hat.rows; }
};

// A = Q T Q^T with T skew tridiagonal, Q assembled from unblocked Householder
// reflectors. Input must be skew-symmetric within 8 eps_m relative.
struct SkewTridiagonalization {
    DenseMatrix q_tilde;
    SkewTridiagonal t;
};
SkewTridiagonalization skew_tridiagonalize(const DenseMatrix& a);

// Even-odd permutation of a skew tridiagonal matrix: perm lists the odd
// (0-based even) positions first, then the even ones, so that
// P^T T P = [0 -B^T; B 0] with B the returned bidiagonal block.
struct EvenOddPermuted {
    RectBidiagonal b_tilde;
    std::vector<int> perm;  // 0-based column order
};
EvenOddPermuted even_odd_permute(const SkewTridiagonal& t);

// Full skew-symmetric real Schur decomposition. Singular values below
// eps1 * sigma_max are treated as zero and their directions routed into the
// nullspace block. eps1 <= 0 selects the default 10 * eps_m.
SkewSchur skew_schur_decompose(const DenseMatrix& a, const KernelProvider& kp,
                               double eps1 = 0.0);

// The n x n block matrix K with skew(A) = Q_hat K Q_hat^T.
DenseMatrix assemble_skew_block_matrix(const SkewSchur& ss);

} // namespace nschur

#endif
