#include "nhr/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace nhr {

ComplexMatrix::ComplexMatrix(std::size_t n) : n_(n), data_(n * n, Complex(0.0, 0.0)) {
    if (n == 0) throw std::invalid_argument("ComplexMatrix: dimension must be >= 1");
}

ComplexMatrix::ComplexMatrix(std::size_t n, std::initializer_list<Complex> entries) : ComplexMatrix(n) {
    if (entries.size() != n * n)
        throw std::invalid_argument("ComplexMatrix: initializer size does not match n*n");
    std::size_t k = 0;
    for (const Complex& e : entries) data_[k++] = e;
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = Complex(1.0, 0.0);
    return m;
}

ComplexMatrix ComplexMatrix::zero(std::size_t n) { return ComplexMatrix(n); }

Complex& ComplexMatrix::at(std::size_t i, std::size_t j) {
    if (i >= n_ || j >= n_) throw std::out_of_range("ComplexMatrix: index out of range");
    return data_[i * n_ + j];
}

const Complex& ComplexMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw std::out_of_range("ComplexMatrix: index out of range");
    return data_[i * n_ + j];
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rhs.n_ != n_) throw std::invalid_argument("ComplexMatrix: dimension mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (rhs.n_ != n_) throw std::invalid_argument("ComplexMatrix: dimension mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
    for (Complex& e : data_) e *= scale;
    return *this;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t.data_[j * n_ + i] = data_[i * n_ + j];
    return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t.data_[j * n_ + i] = std::conj(data_[i * n_ + j]);
    return t;
}

Complex ComplexMatrix::trace() const {
    Complex t(0.0, 0.0);
    for (std::size_t i = 0; i < n_; ++i) t += data_[i * n_ + i];
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& e : data_) s += std::norm(e);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double s = 0.0;
    for (const Complex& e : data_) s = std::max(s, std::abs(e));
    return s;
}

bool ComplexMatrix::all_finite() const {
    for (const Complex& e : data_)
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
    return true;
}

ComplexMatrix& ComplexMatrix::shift_diagonal(Complex c) {
    for (std::size_t i = 0; i < n_; ++i) data_[i * n_ + i] += c;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    const std::size_t n = lhs.dim();
    if (rhs.dim() != n) throw std::invalid_argument("ComplexMatrix: dimension mismatch");
    ComplexMatrix p(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex a = lhs.data()[i * n + k];
            if (a == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) p.data()[i * n + j] += a * rhs.data()[k * n + j];
        }
    }
    return p;
}

ComplexMatrix operator*(Complex scale, ComplexMatrix m) { return m *= scale; }
ComplexMatrix operator*(ComplexMatrix m, Complex scale) { return m *= scale; }

Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t n = a.dim();
    if (b.dim() != n) throw std::invalid_argument("trace_of_product: dimension mismatch");
    Complex t(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) t += a.data()[i * n + k] * b.data()[k * n + i];
    return t;
}

double frobenius_norm_sq(const ComplexMatrix& m) {
    double s = 0.0;
    for (const Complex& e : m.data()) s += std::norm(e);
    return s;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t n = a.dim();
    if (b.dim() != n) throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double s = 0.0;
    for (std::size_t k = 0; k < n * n; ++k) s = std::max(s, std::abs(a.data()[k] - b.data()[k]));
    return s;
}

} // namespace nhr
