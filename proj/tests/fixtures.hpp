#pragma once

#include <random>
#include <vector>

#include "nhr/matrix.hpp"
#include "nhr/polynomial.hpp"

namespace fixtures {

using nhr::Complex;
using nhr::ComplexMatrix;

/// Three-level system with an upper 2x2 block coupled to a lossy level:
/// eigenvalues 0 and omega +- sqrt(a*c).
inline ComplexMatrix f1(Complex omega, Complex a, Complex b, Complex c, Complex d) {
    return ComplexMatrix(3, {omega, a, b,  //
                             c, omega, d,  //
                             Complex(0), Complex(0), Complex(0)});
}

/// All couplings equal: a diabolic point at E = 0, simple eigenvalue at 2.
inline ComplexMatrix f1_dp() { return f1(1.0, 1.0, 1.0, 1.0, 1.0); }

/// c = 0: a second-order exceptional point at E = 1, simple eigenvalue at 0.
inline ComplexMatrix f1_ep() { return f1(1.0, 1.0, 1.0, 0.0, 1.0); }

/// Four-level upper-triangular family with a fourfold degenerate eigenvalue.
inline ComplexMatrix f2(Complex a, Complex b, Complex c, Complex d, Complex e, Complex f,
                        Complex omega = Complex(0.0)) {
    return ComplexMatrix(4, {omega, a, b, c,               //
                             Complex(0), omega, d, e,      //
                             Complex(0), Complex(0), omega, f,  //
                             Complex(0), Complex(0), Complex(0), omega});
}

inline ComplexMatrix f2_ep4() { return f2(1.0, 0.0, 0.0, 1.0, 0.0, 1.0); }          // (4,1,4,1)
inline ComplexMatrix f2_31() { return f2(1.0, 0.0, 0.0, 0.0, 1.0, 0.0); }            // (4,2,3,1)
inline ComplexMatrix f2_22() { return f2(1.0, -1.0, 1.0, 0.0, 1.0, 1.0); }           // (4,2,2,2)
inline ComplexMatrix f2_211() { return f2(1.0, 1.0, 1.0, 0.0, 0.0, 0.0); }           // (4,3,2,1)

/// Jordan block J(value, size).
inline ComplexMatrix jordan_block(Complex value, std::size_t size) {
    ComplexMatrix m(size);
    for (std::size_t i = 0; i < size; ++i) {
        m.at(i, i) = value;
        if (i + 1 < size) m.at(i, i + 1) = Complex(1.0);
    }
    return m;
}

inline ComplexMatrix direct_sum(const std::vector<ComplexMatrix>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.dim();
    ComplexMatrix m(n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.dim(); ++i)
            for (std::size_t j = 0; j < b.dim(); ++j) m.at(off + i, off + j) = b(i, j);
        off += b.dim();
    }
    return m;
}

/// Two 2x2 Jordan blocks at 0 whose superdiagonal weights set distinct
/// sector strengths; the beta = 2 fixture of the polygon tests.
inline ComplexMatrix double_jordan(Complex g1, Complex g2) {
    ComplexMatrix m(4);
    m.at(0, 1) = g1;
    m.at(2, 3) = g2;
    return m;
}

inline ComplexMatrix random_matrix(std::mt19937& rng, std::size_t n, double scale = 1.0) {
    std::normal_distribution<double> dist(0.0, scale);
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Complex(dist(rng), dist(rng));
    return m;
}

inline Complex random_complex(std::mt19937& rng, double scale = 1.0) {
    std::normal_distribution<double> dist(0.0, scale);
    return Complex(dist(rng), dist(rng));
}

/// Monic polynomial from prescribed roots.
inline nhr::Polynomial poly_from_roots(const std::vector<Complex>& roots) {
    std::vector<Complex> coeffs{Complex(1.0)};
    for (Complex r : roots) {
        std::vector<Complex> next(coeffs.size() + 1, Complex(0.0));
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            next[k + 1] += coeffs[k];
            next[k] -= r * coeffs[k];
        }
        coeffs = std::move(next);
    }
    return nhr::Polynomial(coeffs);
}

} // namespace fixtures
