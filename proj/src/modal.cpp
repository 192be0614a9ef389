#include "nhr/modal.hpp"

#include <cmath>

#include "nhr/linalg.hpp"

namespace nhr {

ModalExpansion flv_expand(const ComplexMatrix& h, Complex omega) {
    const std::size_t n = h.dim();
    ModalExpansion exp;
    exp.omega = omega;
    exp.n = n;
    exp.shifted = h;
    exp.shifted.shift_diagonal(-omega);
    exp.shifted_norm = spectral_norm(exp.shifted);
    exp.coeffs.coeffs.assign(n + 1, Complex(0.0, 0.0));
    exp.coeffs.coeffs[n] = Complex(1.0, 0.0);
    exp.modes.assign(n, ComplexMatrix::identity(n));

    // walk down from the seed B_{n-1} = 1
    for (std::size_t k = n; k-- > 0;) {
        const ComplexMatrix prod = exp.shifted * exp.modes[k];
        const Complex ck = -prod.trace() / static_cast<double>(n - k);
        exp.coeffs.coeffs[k] = ck;
        if (k > 0) {
            exp.modes[k - 1] = prod;
            exp.modes[k - 1].shift_diagonal(ck);
        }
    }
    return exp;
}

Polynomial charpoly_newton(const ComplexMatrix& h, Complex omega) {
    const std::size_t n = h.dim();
    ComplexMatrix a = h;
    a.shift_diagonal(-omega);

    std::vector<Complex> power_trace(n + 1, Complex(0.0, 0.0));  // power_trace[m] = tr(A^m)
    ComplexMatrix apow = a;
    for (std::size_t m = 1; m <= n; ++m) {
        power_trace[m] = apow.trace();
        if (m < n) apow = apow * a;
    }

    Polynomial q;
    q.coeffs.assign(n + 1, Complex(0.0, 0.0));
    q.coeffs[n] = Complex(1.0, 0.0);
    for (std::size_t m = 1; m <= n; ++m) {
        Complex acc = power_trace[m];
        for (std::size_t j = 1; j < m; ++j) acc += q.coeffs[n - j] * power_trace[m - j];
        q.coeffs[n - m] = -acc / static_cast<double>(m);
    }
    return q;
}

std::vector<ComplexMatrix> modes_explicit(const Polynomial& coeffs, const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    // powers a^0 .. a^{n-1} by repeated multiplication
    std::vector<ComplexMatrix> powers;
    powers.reserve(n);
    powers.push_back(ComplexMatrix::identity(n));
    for (std::size_t l = 1; l < n; ++l) powers.push_back(powers.back() * a);

    std::vector<ComplexMatrix> modes(n, ComplexMatrix::zero(n));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 1; l <= n - k; ++l) {
            ComplexMatrix term = powers[l - 1];
            term *= coeffs.coeffs[k + l];
            modes[k] += term;
        }
    return modes;
}

ComplexMatrix adjugate_at(const ModalExpansion& exp, Complex energy) {
    const Complex lambda = energy - exp.omega;
    ComplexMatrix acc = exp.modes.back();
    for (std::size_t k = exp.modes.size() - 1; k-- > 0;) {
        acc *= lambda;
        acc += exp.modes[k];
    }
    return acc;
}

Complex charpoly_at(const ModalExpansion& exp, Complex energy) {
    return exp.coeffs.eval(energy - exp.omega);
}

std::vector<Complex> eigenvalues(const ComplexMatrix& h) {
    const std::size_t n = h.dim();
    const Complex center = h.trace() / static_cast<double>(n);
    if (n == 1) return {h(0, 0)};
    const Polynomial q = charpoly_newton(h, center);
    std::vector<Complex> roots = aberth_roots(q);
    for (Complex& r : roots) r += center;
    return roots;
}

Complex refine_eigenvalue(const ComplexMatrix& h, Complex guess, std::size_t multiplicity) {
    if (multiplicity == 0 || multiplicity > h.dim()) return guess;
    Polynomial p = charpoly_newton(h, guess);
    for (std::size_t d = 1; d < multiplicity; ++d) p = p.derivative();
    const Polynomial dp = p.derivative();
    Complex shift(0.0, 0.0);
    for (int it = 0; it < 8; ++it) {
        const Complex value = p.eval(shift);
        const Complex slope = dp.eval(shift);
        if (slope == Complex(0.0, 0.0)) break;
        const Complex step = value / slope;
        shift -= step;
        if (std::abs(step) <= 1e-17 * (1.0 + std::abs(shift))) break;
    }
    return guess + shift;
}

} // namespace nhr
