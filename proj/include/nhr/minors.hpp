#pragma once

#include <cstddef>
#include <vector>

#include "nhr/matrix.hpp"
#include "nhr/polynomial.hpp"

namespace nhr {

/// Determinant of the submatrix of m with the given rows and columns deleted.
/// Index lists are 0-based, strictly increasing, of equal length k < n;
/// k = 0 (both lists empty) gives det(m). Throws BadIndexSet otherwise.
Complex minor(const ComplexMatrix& m, const std::vector<std::size_t>& rows_deleted,
              const std::vector<std::size_t>& cols_deleted);

/// Parity of the permutation that sorts the sequence obtained by prepending
/// `head` to the (already sorted) set `sorted_tail`; 0 if head repeats.
int insertion_parity(std::size_t head, const std::vector<std::size_t>& sorted_tail);

/// Conjugation by the alternating-sign diagonal: (sigma X^T sigma)_{ij}
/// = (-1)^{i+j} X_{ji}.
ComplexMatrix sign_conjugate_transpose(const ComplexMatrix& x);

/// Partial trace of the order-k determinantal minors, straight from the
/// combinatorial definition. Exponential in n; intended as the oracle for
/// the two cheap routes below (n <= 8). k = n returns the identity
/// (recursion seed convention). Throws BadOrder for k outside 1..n.
ComplexMatrix partial_trace_direct(const ComplexMatrix& m, std::size_t k);

/// Same quantity from the top-down cofactor recursion
///   N^(k) = tr(N^(k+1) S)/(n-k) * 1 - N^(k+1) S,   S = sigma m^T sigma,
/// seeded by N^(n) = 1. This is the production path.
ComplexMatrix partial_trace_recursive(const ComplexMatrix& m, std::size_t k);

/// Same quantity from the closed form
///   N^(k) = sum_{l=0}^{n-k} c_{k+l} (-sigma m^T sigma)^l,
/// where coeffs are the characteristic coefficients of -m, i.e. of
/// det(lambda*1 + m) (equivalently flv_expand(h, omega).coeffs whenever
/// m = omega*1 - h).
ComplexMatrix partial_trace_explicit(const ComplexMatrix& m, std::size_t k, const Polynomial& coeffs);

/// Mode via the sign-conjugation identity B_k(A) = sigma [N^(k+1)(-A)]^T sigma,
/// with m playing the role of A. Valid for 0 <= k <= n-1; must reproduce
/// flv_expand(h, omega).modes[k] when m = h - omega*1.
ComplexMatrix mode_from_partial_trace(const ComplexMatrix& m, std::size_t k);

} // namespace nhr
