#include "nhr/minors.hpp"

#include <algorithm>

#include "nhr/errors.hpp"
#include "nhr/linalg.hpp"

namespace nhr {

namespace {

void check_index_list(const std::vector<std::size_t>& idx, std::size_t n, const char* what) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= n) throw BadIndexSet(std::string(what) + ": index out of range");
        if (i > 0 && idx[i] <= idx[i - 1])
            throw BadIndexSet(std::string(what) + ": indices must be strictly increasing");
    }
}

ComplexMatrix submatrix_deleting(const ComplexMatrix& m, const std::vector<std::size_t>& rows_deleted,
                                 const std::vector<std::size_t>& cols_deleted) {
    const std::size_t n = m.dim();
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 0; i < n; ++i)
        if (!std::binary_search(rows_deleted.begin(), rows_deleted.end(), i)) rows.push_back(i);
    for (std::size_t j = 0; j < n; ++j)
        if (!std::binary_search(cols_deleted.begin(), cols_deleted.end(), j)) cols.push_back(j);
    ComplexMatrix sub(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) sub.at(i, j) = m(rows[i], cols[j]);
    return sub;
}

/// sigma m^T sigma without forming intermediates.
ComplexMatrix sign_similar_transpose(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    ComplexMatrix s(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            s.at(i, j) = sign * m(j, i);
        }
    return s;
}

/// Next k-combination of {0..n-1} in lexicographic order; false when done.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

Complex minor(const ComplexMatrix& m, const std::vector<std::size_t>& rows_deleted,
              const std::vector<std::size_t>& cols_deleted) {
    const std::size_t n = m.dim();
    if (rows_deleted.size() != cols_deleted.size())
        throw BadIndexSet("minor: row and column lists must have equal length");
    if (rows_deleted.size() >= n) throw BadIndexSet("minor: order must be below the dimension");
    check_index_list(rows_deleted, n, "minor rows");
    check_index_list(cols_deleted, n, "minor cols");
    return lu_det(submatrix_deleting(m, rows_deleted, cols_deleted));
}

int insertion_parity(std::size_t head, const std::vector<std::size_t>& sorted_tail) {
    int below = 0;
    for (std::size_t v : sorted_tail) {
        if (v == head) return 0;
        if (v < head) ++below;
    }
    return (below % 2 == 0) ? 1 : -1;
}

ComplexMatrix sign_conjugate_transpose(const ComplexMatrix& x) {
    return sign_similar_transpose(x);
}

ComplexMatrix partial_trace_direct(const ComplexMatrix& m, std::size_t k) {
    const std::size_t n = m.dim();
    if (k < 1 || k > n) throw BadOrder("partial_trace: order must lie in 1..n");
    if (k == n) return ComplexMatrix::identity(n);

    ComplexMatrix result(n);
    std::vector<std::size_t> tail(k - 1);
    for (std::size_t i = 0; i < k - 1; ++i) tail[i] = i;
    bool more = true;
    if (k == 1) {
        // empty tail: single term per entry
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) result.at(i, j) = minor(m, {i}, {j});
        return result;
    }
    while (more) {
        for (std::size_t i = 0; i < n; ++i) {
            const int si = insertion_parity(i, tail);
            if (si == 0) continue;
            std::vector<std::size_t> rows(tail);
            rows.push_back(i);
            std::sort(rows.begin(), rows.end());
            for (std::size_t j = 0; j < n; ++j) {
                const int sj = insertion_parity(j, tail);
                if (sj == 0) continue;
                std::vector<std::size_t> cols(tail);
                cols.push_back(j);
                std::sort(cols.begin(), cols.end());
                result.at(i, j) += static_cast<double>(si * sj) * minor(m, rows, cols);
            }
        }
        more = next_combination(tail, n);
    }
    return result;
}

ComplexMatrix partial_trace_recursive(const ComplexMatrix& m, std::size_t k) {
    const std::size_t n = m.dim();
    if (k < 1 || k > n) throw BadOrder("partial_trace: order must lie in 1..n");
    const ComplexMatrix s = sign_similar_transpose(m);
    ComplexMatrix current = ComplexMatrix::identity(n);  // N^(n)
    for (std::size_t order = n; order-- > k;) {
        ComplexMatrix prod = current * s;
        const Complex mean = prod.trace() / static_cast<double>(n - order);
        prod *= Complex(-1.0, 0.0);
        prod.shift_diagonal(mean);
        current = std::move(prod);
    }
    return current;
}

ComplexMatrix partial_trace_explicit(const ComplexMatrix& m, std::size_t k, const Polynomial& coeffs) {
    const std::size_t n = m.dim();
    if (k < 1 || k > n) throw BadOrder("partial_trace: order must lie in 1..n");
    if (coeffs.coeffs.size() != n + 1)
        throw std::invalid_argument("partial_trace_explicit: need n+1 characteristic coefficients");
    ComplexMatrix s = sign_similar_transpose(m);
    s *= Complex(-1.0, 0.0);
    // Horner over matrices in powers of -sigma m^T sigma
    ComplexMatrix acc = ComplexMatrix::identity(n);
    acc *= coeffs.coeffs[n];
    for (std::size_t l = n; l-- > k;) {
        acc = acc * s;
        acc.shift_diagonal(coeffs.coeffs[l]);
    }
    return acc;
}

ComplexMatrix mode_from_partial_trace(const ComplexMatrix& m, std::size_t k) {
    const std::size_t n = m.dim();
    if (k > n - 1) throw BadOrder("mode_from_partial_trace: mode index must lie in 0..n-1");
    ComplexMatrix neg = m;
    neg *= Complex(-1.0, 0.0);
    return sign_conjugate_transpose(partial_trace_recursive(neg, k + 1));
}

} // namespace nhr
