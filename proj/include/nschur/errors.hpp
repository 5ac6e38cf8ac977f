#ifndef NSCHUR_ERRORS_HPP
#define NSCHUR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nschur {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Shape or argument mismatch (non-square input, length mismatch, ...).
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// Input fails a structural predicate (not skew, not symmetric, not orthogonal,
// not normal within tolerance).
class StructureError : public Error {
public:
    explicit StructureError(const std::string& msg) : Error(msg) {}
};

// An iterative kernel exceeded its sweep budget.
class NonConvergenceError : public Error {
public:
    explicit NonConvergenceError(const std::string& msg) : Error(msg) {}
};

// Recovered eigenvalues of a repeated-sigma subproblem do not match the
// cluster they were assigned to.
class ClusterConsistencyError : public Error {
public:
    explicit ClusterConsistencyError(const std::string& msg) : Error(msg) {}
};

// Principal matrix logarithm does not exist (unpaired nonpositive real
// eigenvalue) or the matrix is singular.
class PrincipalLogError : public Error {
public:
    explicit PrincipalLogError(const std::string& msg) : Error(msg) {}
};

// Lanczos iteration produced a near-zero new direction before completing,
// i.e. the even-multiplicity assumption does not hold.
class BreakdownError : public Error {
public:
    explicit BreakdownError(const std::string& msg) : Error(msg) {}
};

} // namespace nschur

#endif
