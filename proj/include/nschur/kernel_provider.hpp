#ifndef NSCHUR_KERNEL_PROVIDER_HPP
#define NSCHUR_KERNEL_PROVIDER_HPP

#include <functional>
#include <string>
#include <vector>

#include "nschur/dense_matrix.hpp"

namespace nschur {

// Square upper-bidiagonal matrix: diag has length p, superdiag length p-1.
struct Bidiagonal {
    std::vector<double> diag;
    std::vector<double> superdiag;

    int size() const { return static_cast<int>(diag.size()); }
    DenseMatrix dense() const;
};

struct BidiagonalSvd {
    DenseMatrix u;              // p x p orthogonal
    std::vector<double> sigma;  // descending, >= 0
    DenseMatrix v;              // p x p orthogonal, B = U diag(sigma) V^T
};

struct SymmetricEvd {
    DenseMatrix r;              // orthogonal, H = R diag(lam) R^T
    std::vector<double> lam;    // descending
};

struct RealSchur {
    DenseMatrix q;  // orthogonal
    DenseMatrix s;  // quasi-upper-triangular (1x1 and 2x2 diagonal blocks)
};

// Pluggable backend for the three dense kernels everything else is built on:
// bidiagonal SVD, symmetric EVD, and a general real Schur decomposition.
// Providers are immutable configuration; swapping one for another changes
// results only within the documented tolerances.
struct KernelProvider {
    std::string name;
    std::function<BidiagonalSvd(const Bidiagonal&)> bidiagonal_svd;
    std::function<SymmetricEvd(const DenseMatrix&)> symmetric_evd;
    std::function<RealSchur(const DenseMatrix&)> general_real_schur;
    // Hessenberg reduction with the orthogonal factor assembled explicitly;
    // used as a benchmark baseline.
    std::function<RealSchur(const DenseMatrix&)> hessenberg_with_q;
};

// Self-contained implementations: implicit-shift Golub-Kahan QR for the
// bidiagonal SVD, Householder tridiagonalization + implicit QL with Wilkinson
// shift for the symmetric EVD, Hessenberg + Francis double-shift QR for the
// general real Schur form.
const KernelProvider& reference_provider();

// LAPACK-backed provider (dbdsqr/dsyevd/dgees/dgehrd+dorghr) behind the same
// contract. Only available when the library was built against LAPACKE.
bool native_provider_available();
const KernelProvider& native_provider();

// Lookup by name: "reference" or "native". The NSCHUR_KERNELS environment
// variable overrides `name` when set.
const KernelProvider& provider_by_name(const std::string& name);

// Standalone entry points on the reference implementations.
BidiagonalSvd ref_bidiagonal_svd(const Bidiagonal& b);
SymmetricEvd ref_symmetric_evd(const DenseMatrix& h);
RealSchur ref_general_real_schur(const DenseMatrix& a);
RealSchur ref_hessenberg_with_q(const DenseMatrix& a);

// Eigenvalues of a quasi-upper-triangular S as (re, im) pairs, in diagonal
// order. 2x2 blocks yield conjugate pairs.
std::vector<std::pair<double, double>> quasi_triangular_eigenvalues(const DenseMatrix& s);

} // namespace nschur

#endif
