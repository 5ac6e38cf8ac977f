#ifndef NSCHUR_BLOCK_SCHUR_HPP
#define NSCHUR_BLOCK_SCHUR_HPP

#include <complex>
#include <vector>

#include "nschur/dense_matrix.hpp"

namespace nschur {

// Permuted real Schur form of a normal matrix: A = Q S Q^T with
//
//         [ L cos(T)    0     -L sin(T) ]
//     S = [    0     diag(lr)     0     ],   L = diag(lambda), T = diag(theta)
//         [ L sin(T)    0      L cos(T) ]
//
// Columns of Q are grouped [p pair-left | r real | p pair-right]. Pair j is
// carried by columns (j, p+r+j) and has eigenvalues lambda_j e^{+-i theta_j};
// lambda_j > 0, theta_j in (0, pi). Pairs are sorted by descending
// lambda_j*sin(theta_j), ties by ascending original index; the real
// eigenvalues are sorted descending.
struct BlockSchur {
    DenseMatrix q;                    // n x n orthogonal
    std::vector<double> lambda;       // length p, all > 0
    std::vector<double> theta;        // length p, in (0, pi)
    std::vector<double> lambda_real;  // length r
    int n = 0;                        // n = 2p + r

    int p() const { return static_cast<int>(lambda.size()); }
    int r() const { return static_cast<int>(lambda_real.size()); }
};

struct EigenDecomposition {
    std::vector<std::complex<double>> values;   // length n
    std::vector<std::complex<double>> vectors;  // n x n row-major, unit columns
    int n = 0;

    std::complex<double> vec(int i, int j) const {
        return vectors[static_cast<size_t>(i) * n + j];
    }
};

// Assembles the n x n matrix S in the block layout above.
DenseMatrix assemble_schur_matrix(const BlockSchur& bs);

// Eigenvalues and eigenvectors from the Schur form. Pair j contributes
// lambda_j e^{+i theta_j} with eigenvector (q1 - i q2)/sqrt(2) followed by
// the conjugate value with eigenvector (q1 + i q2)/sqrt(2), where (q1, q2)
// are the pair's Schur vector columns; the real block follows.
EigenDecomposition schur_to_eigen(const BlockSchur& bs);

// ||A Q - Q S||_F / ||A||_F (zero for the zero matrix).
double schur_residual(const DenseMatrix& a, const BlockSchur& bs);

} // namespace nschur

#endif
