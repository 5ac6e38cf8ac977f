#ifndef NSCHUR_CORE_KERNELS_HPP
#define NSCHUR_CORE_KERNELS_HPP

#include "nschur/dense_matrix.hpp"

namespace nschur {

// Thread budget for the OpenMP kernels below. Defaults to 1 so that library
// results and timings are single-threaded unless a caller opts in. Kernels
// parallelize over disjoint output blocks, so results are identical for any
// thread count.
void set_max_threads(int k);
int max_threads();

// C = A * B
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
// C = A^T * B
DenseMatrix matmul_tn(const DenseMatrix& a, const DenseMatrix& b);
// C = A * B^T
DenseMatrix matmul_nt(const DenseMatrix& a, const DenseMatrix& b);

void matmul_into(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c);
void matmul_tn_into(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c);
void matmul_nt_into(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c);

// y = A x (x, y densely stored vectors, y preallocated length a.rows)
void matvec(const DenseMatrix& a, const double* x, double* y);

// Rank-1 update on a rectangular block of A: A[r0:r1, c0:c1] -= v * w^T,
// v indexed from r0, w from c0.
void rank1_update_sub(DenseMatrix& a, int r0, int r1, int c0, int c1,
                      const double* v, const double* w);

// Q * S * Q^T for square Q, S.
DenseMatrix sandwich(const DenseMatrix& q, const DenseMatrix& s);

// Serial reference kernels: straightforward triple loops, kept as the oracle
// the blocked/OpenMP versions are tested against.
namespace ref {
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix matmul_tn(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix matmul_nt(const DenseMatrix& a, const DenseMatrix& b);
} // namespace ref

} // namespace nschur

#endif
