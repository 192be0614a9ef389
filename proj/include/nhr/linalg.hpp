#pragma once

#include <optional>
#include <vector>

#include "nhr/matrix.hpp"

namespace nhr {

/// Determinant via partially pivoted Gaussian elimination. Singular input
/// returns 0; exact for triangular input up to rounding.
Complex lu_det(const ComplexMatrix& m);

/// Solves m * X = rhs with partial pivoting. Throws SingularMatrix when a
/// pivot falls below tolerance.
ComplexMatrix lu_solve(const ComplexMatrix& m, const ComplexMatrix& rhs);

struct Svd {
    ComplexMatrix u;                // unitary, columns are left singular vectors
    std::vector<double> singular;   // descending, >= 0
    ComplexMatrix v;                // unitary, m = u * diag(singular) * v^dagger
};

/// One-sided Jacobi SVD of a square complex matrix. Throws NoConvergence if
/// the rotation cap (30 n^2) is exhausted before the columns decouple.
Svd svd(const ComplexMatrix& m);

/// Largest singular value.
double spectral_norm(const ComplexMatrix& m);

/// Count of singular values above tol (default n * eps * sigma_max).
std::size_t numerical_rank(const ComplexMatrix& m, std::optional<double> tol = std::nullopt);

/// Orthonormal basis of the numerical null space (right singular vectors for
/// singular values <= tol), one vector per column-equivalent entry.
std::vector<std::vector<Complex>> nullspace(const ComplexMatrix& m, std::optional<double> tol = std::nullopt);

} // namespace nhr
