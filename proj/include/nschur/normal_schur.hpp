#ifndef NSCHUR_NORMAL_SCHUR_HPP
#define NSCHUR_NORMAL_SCHUR_HPP

#include <vector>

#include "nschur/block_schur.hpp"
#include "nschur/dense_matrix.hpp"
#include "nschur/kernel_provider.hpp"
#include "nschur/skew_schur.hpp"

namespace nschur {

// Group of adjacent, equal-within-eps1 singular values.
struct SigmaCluster {
    int start = 0;       // index into sigma
    int m = 0;           // multiplicity
    double value = 0.0;  // first (largest) member
};

// Greedy left-to-right clustering of a descending sigma vector: a value joins
// the current cluster iff it is within eps1 * sigma_max of the cluster's
// first member.
std::vector<SigmaCluster> cluster_sigmas(const std::vector<double>& sigma, double eps1);

enum class Group2Path {
    kDefault,     // general real Schur on the 2m x 2m subproblem
    kSymplectic,  // opt-in Lanczos fast path, falls back to kDefault on failure
};

struct NormalSchurOptions {
    double eps1 = 0.0;            // <= 0: default 10 * eps_m
    double normality_tol = 1e-8;  // bound on normality_defect(a)
    bool skip_check = false;      // skip normality / off-diagonal verification
    Group2Path group2_path = Group2Path::kDefault;
    double tol_scn = 1e-10;       // scenario-1 shortcut test, relative
};

// Solution of the repeated-imaginary-part subproblem
// V^T A V = R [D -sigma I; sigma I D] R^T.
struct Group2Result {
    DenseMatrix r_block;    // 2m x 2m orthogonal
    std::vector<double> d;  // length m, descending
};

// v: n x 2m with orthonormal columns spanning the sigma-cluster invariant
// subspace (the paired column blocks of Q_hat). eps1 must be the clustering
// tolerance in absolute terms (eps1 * sigma_max).
Group2Result group2_subproblem(const DenseMatrix& a, const DenseMatrix& v,
                               double sigma, const KernelProvider& kp,
                               Group2Path path = Group2Path::kDefault,
                               double abs_eps1 = 0.0, double tol_scn = 1e-10);

// Symmetric EVD of H = Q_r^T A Q_r where q_r spans the nullspace of skew(A).
struct RealBlockEvd {
    DenseMatrix r_breve;           // r x r orthogonal
    std::vector<double> lam_real;  // descending
};
RealBlockEvd real_block_evd(const DenseMatrix& a, const DenseMatrix& q_r,
                            const KernelProvider& kp);

// Real Schur decomposition of a normal matrix via its skew-symmetric part.
BlockSchur normal_schur(const DenseMatrix& a, const KernelProvider& kp,
                        const NormalSchurOptions& opts = {});

// Converts a quasi-upper-triangular real Schur decomposition (from a general
// Schur kernel) of a normal matrix into the canonical BlockSchur layout.
// Structural 2x2 blocks with real eigenvalues are rejected.
BlockSchur quasi_schur_to_block(const RealSchur& rs);

} // namespace nschur

#endif
