#ifndef NSCHUR_DENSE_MATRIX_HPP
#define NSCHUR_DENSE_MATRIX_HPP

#include <string>
#include <vector>

#include "nschur/errors.hpp"

namespace nschur {

// Dense real matrix, double precision.
//
// Storage convention (used by every kernel in this library): row-major,
// entry (i, j) lives at data[i * cols + j].
struct DenseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    DenseMatrix() = default;
    DenseMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0.0) {
        if (r < 0 || c < 0) throw DimensionError("DenseMatrix: negative dimension");
    }

    static DenseMatrix zero(int r, int c) { return DenseMatrix(r, c); }
    static DenseMatrix identity(int n);

    double& operator()(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

    double* row(int i) { return data.data() + static_cast<size_t>(i) * cols; }
    const double* row(int i) const { return data.data() + static_cast<size_t>(i) * cols; }

    bool square() const { return rows == cols; }
    bool all_finite() const;

    DenseMatrix transposed() const;
};

// Throws StructureError if any entry is NaN/Inf. Call on user-provided input.
void require_finite(const DenseMatrix& a, const std::string& what);

double frobenius_norm(const DenseMatrix& a);

// (A + A^T)/2 and (A - A^T)/2. Throw DimensionError on non-square input.
DenseMatrix sym_part(const DenseMatrix& a);
DenseMatrix skew_part(const DenseMatrix& a);

// ||A A^T - A^T A||_F / ||A||_F^2, zero for the zero matrix. Scale invariant.
double normality_defect(const DenseMatrix& a);

// ||Q^T Q - I||_F / sqrt(n)
double orthogonality_defect(const DenseMatrix& q);

// Sign of det(Q) via LU with partial pivoting (log-accumulated magnitudes).
// Returns +1, -1, or 0 for a numerically singular matrix.
int determinant_sign(const DenseMatrix& q);

// Structural predicates with relative Frobenius tolerance.
bool is_symmetric(const DenseMatrix& a, double rel_tol);
bool is_skew_symmetric(const DenseMatrix& a, double rel_tol);

// Default orthogonality tolerance: 32 * eps_m * sqrt(n).
double default_orth_tol(int n);

// Plain-text matrix file format: first line "rows cols", then `rows` lines of
// whitespace-separated decimals written with 17 significant digits.
void write_matrix(const std::string& path, const DenseMatrix& a);
DenseMatrix read_matrix(const std::string& path);

} // namespace nschur

#endif
