#include "nhr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "nhr/errors.hpp"

namespace nhr {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct LuFactors {
    ComplexMatrix lu;
    std::vector<std::size_t> pivot;  // row chosen at each elimination step
    int sign = 1;
    double smallest_pivot = 0.0;
    double largest_entry = 0.0;
};

LuFactors lu_factor(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    LuFactors f{m, std::vector<std::size_t>(n), 1, std::numeric_limits<double>::infinity(), m.max_abs()};
    auto& a = f.lu.data();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(a[k * n + k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double cand = std::abs(a[i * n + k]);
            if (cand > best) { best = cand; p = i; }
        }
        f.pivot[k] = p;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
            f.sign = -f.sign;
        }
        f.smallest_pivot = std::min(f.smallest_pivot, best);
        const Complex piv = a[k * n + k];
        if (best == 0.0) continue;  // singular; leave the zero column as-is
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex factor = a[i * n + k] / piv;
            a[i * n + k] = factor;
            if (factor == Complex(0.0, 0.0)) continue;
            for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] -= factor * a[k * n + j];
        }
    }
    return f;
}

} // namespace

Complex lu_det(const ComplexMatrix& m) {
    const LuFactors f = lu_factor(m);
    const std::size_t n = m.dim();
    Complex det(static_cast<double>(f.sign), 0.0);
    for (std::size_t k = 0; k < n; ++k) det *= f.lu.data()[k * n + k];
    return det;
}

ComplexMatrix lu_solve(const ComplexMatrix& m, const ComplexMatrix& rhs) {
    const std::size_t n = m.dim();
    if (rhs.dim() != n) throw std::invalid_argument("lu_solve: dimension mismatch");
    const LuFactors f = lu_factor(m);
    const double tol = static_cast<double>(n) * kEps * std::max(f.largest_entry, 1e-300);
    if (f.smallest_pivot <= tol)
        throw SingularMatrix("lu_solve: pivot below tolerance, matrix is numerically singular");

    ComplexMatrix x = rhs;
    auto& xv = x.data();
    const auto& a = f.lu.data();
    // apply row permutation
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t p = f.pivot[k];
        if (p != k)
            for (std::size_t j = 0; j < n; ++j) std::swap(xv[k * n + j], xv[p * n + j]);
    }
    // forward substitution (unit lower triangle)
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t k = 0; k < i; ++k) {
            const Complex factor = a[i * n + k];
            if (factor == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) xv[i * n + j] -= factor * xv[k * n + j];
        }
    // back substitution
    for (std::size_t ii = n; ii-- > 0;) {
        const Complex piv = a[ii * n + ii];
        for (std::size_t j = 0; j < n; ++j) xv[ii * n + j] /= piv;
        for (std::size_t k = 0; k < ii; ++k) {
            const Complex factor = a[k * n + ii];
            if (factor == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) xv[k * n + j] -= factor * xv[ii * n + j];
        }
    }
    return x;
}

Svd svd(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    ComplexMatrix g = m;               // columns converge to u_j * s_j
    ComplexMatrix v = ComplexMatrix::identity(n);
    auto& gd = g.data();
    auto& vd = v.data();

    const std::size_t rotation_cap = 30 * n * n;
    std::size_t rotations = 0;
    // The Frobenius norm is invariant under the right rotations, so it is a
    // stable scale for declaring a decayed column numerically zero.
    const double fro = g.frobenius_norm();
    const double column_floor = 2.0 * kEps * fro;
    bool converged = (n == 1);
    while (!converged) {
        converged = true;
        for (std::size_t j = 0; j < n; ++j) {
            double s2 = 0.0;
            for (std::size_t k = 0; k < n; ++k) s2 += std::norm(gd[k * n + j]);
            if (s2 > 0.0 && std::sqrt(s2) <= column_floor)
                for (std::size_t k = 0; k < n; ++k) gd[k * n + j] = Complex(0.0, 0.0);
        }
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                double alpha = 0.0, beta = 0.0;
                Complex gamma(0.0, 0.0);
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex gi = gd[k * n + i];
                    const Complex gj = gd[k * n + j];
                    alpha += std::norm(gi);
                    beta += std::norm(gj);
                    gamma += std::conj(gi) * gj;
                }
                const double off = std::abs(gamma);
                if (off <= 1e-15 * std::sqrt(alpha * beta) || off == 0.0) continue;
                converged = false;
                if (++rotations > rotation_cap)
                    throw NoConvergence("svd: Jacobi rotation cap exceeded");

                const double tau = (beta - alpha) / (2.0 * off);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                const Complex phase = gamma / off;
                const Complex sp = s * phase;
                const Complex spc = s * std::conj(phase);
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex gi = gd[k * n + i];
                    const Complex gj = gd[k * n + j];
                    gd[k * n + i] = c * gi - spc * gj;
                    gd[k * n + j] = sp * gi + c * gj;
                    const Complex vi = vd[k * n + i];
                    const Complex vj = vd[k * n + j];
                    vd[k * n + i] = c * vi - spc * vj;
                    vd[k * n + j] = sp * vi + c * vj;
                }
            }
        }
    }

    // Column norms are the singular values; sort descending.
    std::vector<double> sig(n);
    for (std::size_t j = 0; j < n; ++j) {
        double s2 = 0.0;
        for (std::size_t k = 0; k < n; ++k) s2 += std::norm(gd[k * n + j]);
        sig[j] = std::sqrt(s2);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sig[a] > sig[b]; });

    Svd out{ComplexMatrix(n), std::vector<double>(n), ComplexMatrix(n)};
    for (std::size_t jj = 0; jj < n; ++jj) {
        const std::size_t src = order[jj];
        out.singular[jj] = sig[src];
        for (std::size_t k = 0; k < n; ++k) out.v.data()[k * n + jj] = vd[k * n + src];
        if (sig[src] > 0.0) {
            for (std::size_t k = 0; k < n; ++k) out.u.data()[k * n + jj] = gd[k * n + src] / sig[src];
        }
    }
    // Complete u with an orthonormal basis for the zero singular values,
    // taking for each empty column the basis vector with the largest residual
    // after projecting out the columns filled so far (unfilled columns are
    // all-zero, so projecting onto them is a no-op).
    for (std::size_t jj = 0; jj < n; ++jj) {
        if (out.singular[jj] > 0.0) continue;
        std::vector<Complex> best(n, Complex(0.0, 0.0));
        double best_norm = -1.0;
        for (std::size_t trial = 0; trial < n; ++trial) {
            std::vector<Complex> cand(n, Complex(0.0, 0.0));
            cand[trial] = Complex(1.0, 0.0);
            for (std::size_t prev = 0; prev < n; ++prev) {
                if (prev == jj) continue;
                Complex proj(0.0, 0.0);
                for (std::size_t k = 0; k < n; ++k) proj += std::conj(out.u.data()[k * n + prev]) * cand[k];
                for (std::size_t k = 0; k < n; ++k) cand[k] -= proj * out.u.data()[k * n + prev];
            }
            double nrm = 0.0;
            for (const Complex& c : cand) nrm += std::norm(c);
            nrm = std::sqrt(nrm);
            if (nrm > best_norm) {
                best_norm = nrm;
                best = std::move(cand);
            }
        }
        for (std::size_t k = 0; k < n; ++k) out.u.data()[k * n + jj] = best[k] / best_norm;
    }
    return out;
}

double spectral_norm(const ComplexMatrix& m) { return svd(m).singular.front(); }

std::size_t numerical_rank(const ComplexMatrix& m, std::optional<double> tol) {
    const Svd dec = svd(m);
    const double cutoff = tol.value_or(static_cast<double>(m.dim()) * kEps * dec.singular.front());
    std::size_t r = 0;
    for (double s : dec.singular)
        if (s > cutoff) ++r;
    return r;
}

std::vector<std::vector<Complex>> nullspace(const ComplexMatrix& m, std::optional<double> tol) {
    const std::size_t n = m.dim();
    const Svd dec = svd(m);
    const double cutoff = tol.value_or(static_cast<double>(n) * kEps * dec.singular.front());
    std::vector<std::vector<Complex>> basis;
    for (std::size_t j = 0; j < n; ++j) {
        if (dec.singular[j] > cutoff) continue;
        std::vector<Complex> col(n);
        for (std::size_t k = 0; k < n; ++k) col[k] = dec.v.data()[k * n + j];
        basis.push_back(std::move(col));
    }
    return basis;
}

} // namespace nhr
