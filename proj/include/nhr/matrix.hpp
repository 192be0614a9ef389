#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace nhr {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. Sizes in this project are
/// desk-scale (n of order 10), so all operations are straightforward
/// O(n^2)/O(n^3) loops with bounds-checked element access.
class ComplexMatrix {
public:
    explicit ComplexMatrix(std::size_t n);
    ComplexMatrix(std::size_t n, std::initializer_list<Complex> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zero(std::size_t n);

    std::size_t dim() const { return n_; }

    Complex& at(std::size_t i, std::size_t j);
    const Complex& at(std::size_t i, std::size_t j) const;
    Complex operator()(std::size_t i, std::size_t j) const { return at(i, j); }

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex scale);

    ComplexMatrix transpose() const;
    ComplexMatrix adjoint() const;

    Complex trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    bool all_finite() const;

    /// Adds c to every diagonal entry (m + c*identity).
    ComplexMatrix& shift_diagonal(Complex c);

    const std::vector<Complex>& data() const { return data_; }
    std::vector<Complex>& data() { return data_; }

private:
    std::size_t n_;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex scale);

/// tr(a*b) without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// sqrt(tr(m^dagger m)), identical to frobenius_norm but spelled out where
/// the quadratic form is the quantity of interest.
double frobenius_norm_sq(const ComplexMatrix& m);

/// Entrywise distance max_ij |a_ij - b_ij|.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace nhr
