#pragma once

#include <vector>

#include "nhr/matrix.hpp"
#include "nhr/polynomial.hpp"

namespace nhr {

/// Modal expansion of the adjugate at a reference energy:
///   adj(lambda*1 - A) = sum_k lambda^k * modes[k],    A = h - omega*1,
/// together with the coefficients of the shifted characteristic polynomial
///   q(lambda) = det(lambda*1 - A) = sum_k coeffs[k] * lambda^k  (monic).
/// modes[n-1] is always the identity (recursion seed).
struct ModalExpansion {
    Complex omega;
    std::size_t n = 0;
    Polynomial coeffs;                 // c_0 .. c_n, c_n = 1
    std::vector<ComplexMatrix> modes;  // B_0 .. B_{n-1}
    ComplexMatrix shifted;             // A = h - omega*1
    double shifted_norm = 0.0;         // ||A||_2, cached for tolerance scales

    ModalExpansion() : shifted(1) {}
};

/// Faddeev-LeVerrier recursion: B_{n-1} = 1, B_{k-1} = A B_k + c_k 1 with
/// c_k = -tr(A B_k)/(n-k). One pass yields all modes and all coefficients.
ModalExpansion flv_expand(const ComplexMatrix& h, Complex omega);

/// Characteristic coefficients of h - omega*1 from the power traces
/// tr(A^m) via Newton's identities; independent oracle for flv_expand.
Polynomial charpoly_newton(const ComplexMatrix& h, Complex omega);

/// Closed-form modes B_k = sum_{l=1}^{n-k} c_{k+l} A^{l-1}; independent of
/// the recursion, used as its oracle.
std::vector<ComplexMatrix> modes_explicit(const Polynomial& coeffs, const ComplexMatrix& a);

/// Evaluates the expansion: adj(energy*1 - h) = sum_k (energy-omega)^k B_k,
/// by Horner's scheme over matrices.
ComplexMatrix adjugate_at(const ModalExpansion& exp, Complex energy);

/// q(energy - omega) = det(energy*1 - h), evaluated by Horner from coeffs.
Complex charpoly_at(const ModalExpansion& exp, Complex energy);

/// Eigenvalues of h: Aberth roots of the shifted characteristic polynomial
/// at omega = tr(h)/n, shifted back.
std::vector<Complex> eigenvalues(const ComplexMatrix& h);

/// Polishes a degenerate eigenvalue estimate. A root of multiplicity m is a
/// simple root of the (m-1)-th derivative of the characteristic polynomial,
/// so Newton's method there recovers it to machine accuracy, whereas the
/// mean of a resolved root cluster is limited by the m-th-root noise floor.
Complex refine_eigenvalue(const ComplexMatrix& h, Complex guess, std::size_t multiplicity);

} // namespace nhr
