#include "nhr/degeneracy.hpp"

#include <algorithm>
#include <cmath>

#include "nhr/errors.hpp"
#include "nhr/linalg.hpp"

namespace nhr {

namespace {

double power_scale(double base, std::size_t power) {
    double scale = 1.0;
    for (std::size_t i = 0; i < power; ++i) scale *= base;
    return std::max(1.0, scale);
}

ComplexMatrix outer_product(const std::vector<Complex>& col, const std::vector<Complex>& row) {
    ComplexMatrix m(col.size());
    for (std::size_t i = 0; i < col.size(); ++i)
        for (std::size_t j = 0; j < row.size(); ++j) m.at(i, j) = col[i] * row[j];
    return m;
}

double vector_norm(const std::vector<Complex>& v) {
    double s = 0.0;
    for (const Complex& c : v) s += std::norm(c);
    return std::sqrt(s);
}

/// Spectral decomposition route for semisimple first modes. The mode divided
/// by the leading coefficient is an oblique projector onto the eigenspace, so
/// its finite eigenvalues all equal the leading coefficient; the right and
/// left eigenspaces come from the null spaces of the shifted mode and are
/// paired biorthogonally.
LeadingSectors sectors_from_eigenvalues(const ComplexMatrix& mode, Complex leading_coefficient,
                                        std::size_t count) {
    const std::size_t n = mode.dim();
    const Complex value = leading_coefficient;

    ComplexMatrix shifted = mode;
    shifted.shift_diagonal(-value);
    double cutoff = 1e-8 * std::max(1.0, spectral_norm(shifted));
    std::vector<std::vector<Complex>> right_basis, left_basis;
    for (int attempt = 0; attempt < 4; ++attempt) {
        right_basis = nullspace(shifted, cutoff);
        left_basis = nullspace(shifted.adjoint(), cutoff);
        if (right_basis.size() >= count && left_basis.size() >= count) break;
        cutoff *= 10.0;
    }
    right_basis.resize(std::min(right_basis.size(), count));
    left_basis.resize(std::min(left_basis.size(), count));
    const std::size_t dim = std::min(right_basis.size(), left_basis.size());

    LeadingSectors out;
    out.count = count;
    if (dim == 0) return out;

    // biorthogonalize: rows of overlap^{-1} W^dagger pair with columns of R
    ComplexMatrix overlap(dim);
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) {
            Complex acc(0.0, 0.0);
            for (std::size_t k = 0; k < n; ++k) acc += std::conj(left_basis[a][k]) * right_basis[b][k];
            overlap.at(a, b) = acc;
        }
    const ComplexMatrix overlap_inv = lu_solve(overlap, ComplexMatrix::identity(dim));

    for (std::size_t b = 0; b < dim; ++b) {
        std::vector<Complex> bra(n, Complex(0.0, 0.0));
        for (std::size_t a = 0; a < dim; ++a) {
            const Complex w = overlap_inv(b, a);
            for (std::size_t k = 0; k < n; ++k) bra[k] += w * std::conj(left_basis[a][k]);
        }
        ComplexMatrix sector = outer_product(right_basis[b], bra);
        sector *= value;
        out.sectors.push_back(std::move(sector));
        out.strengths.push_back(std::abs(value) / std::abs(leading_coefficient));
        out.right.push_back(right_basis[b]);
        const double bn = vector_norm(bra);
        for (Complex& c : bra) c /= bn;
        out.left.push_back(std::move(bra));
    }
    return out;
}

} // namespace

double default_tolerance(std::size_t n) { return 1e-9 * static_cast<double>(n); }

std::size_t algebraic_multiplicity(const ModalExpansion& exp, double tol) {
    for (std::size_t k = 0; k <= exp.n; ++k) {
        const double scale = power_scale(exp.shifted_norm, exp.n - k);
        if (std::abs(exp.coeffs.coeffs[k]) > tol * scale) return k;
    }
    return exp.n;  // unreachable: the leading coefficient is 1
}

std::size_t geometric_multiplicity(const ComplexMatrix& h, Complex eigenvalue, std::optional<double> tol) {
    ComplexMatrix shifted = h;
    shifted *= Complex(-1.0, 0.0);
    shifted.shift_diagonal(eigenvalue);
    std::optional<double> cutoff;
    if (tol) cutoff = *tol * std::max(1.0, spectral_norm(shifted));
    return h.dim() - numerical_rank(shifted, cutoff);
}

FirstMode max_partial_multiplicity(const ModalExpansion& exp, std::size_t alpha, double tol) {
    const double root_n = std::sqrt(static_cast<double>(exp.n));
    for (std::size_t m = 0; m < exp.n; ++m) {
        const double scale = power_scale(exp.shifted_norm, exp.n - 1 - m) * root_n;
        if (exp.modes[m].frobenius_norm() > tol * scale) {
            if (m >= alpha)
                throw DegenerateInput("max_partial_multiplicity: first finite mode beyond the algebraic multiplicity");
            FirstMode out;
            out.index = m;
            out.max_partial = alpha - m;
            out.mode = exp.modes[m];
            return out;
        }
    }
    throw DegenerateInput("max_partial_multiplicity: all modes vanish below tolerance");
}

LeadingSectors leading_sectors(const ComplexMatrix& first_mode, Complex leading_coefficient,
                               std::size_t max_partial, double tol) {
    const std::size_t n = first_mode.dim();
    if (first_mode.frobenius_norm() <= tol * std::sqrt(static_cast<double>(n)))
        throw ZeroMode("leading_sectors: first finite mode is numerically zero");

    // Rank against the classification tolerance, not machine epsilon: at an
    // eigenvalue known only to rounding accuracy the mode carries spurious
    // singular values of order eps * cond, well above n*eps*sigma_1.
    const Svd dec = svd(first_mode);
    std::size_t count = 0;
    for (double s : dec.singular)
        if (s > tol * dec.singular.front()) ++count;
    if (max_partial == 1) return sectors_from_eigenvalues(first_mode, leading_coefficient, count);

    LeadingSectors out;
    out.count = count;
    const double denom = std::abs(leading_coefficient);
    for (std::size_t j = 0; j < count; ++j) {
        out.strengths.push_back(dec.singular[j] / denom);
        std::vector<Complex> right(n), left(n);
        for (std::size_t k = 0; k < n; ++k) {
            right[k] = dec.u(k, j);
            left[k] = std::conj(dec.v(k, j));  // bra components of v_j^dagger
        }
        ComplexMatrix sector = outer_product(right, left);
        sector *= dec.singular[j];
        out.sectors.push_back(std::move(sector));
        out.right.push_back(std::move(right));
        out.left.push_back(std::move(left));
    }
    return out;
}

ResponseStrengths response_strengths(const ComplexMatrix& first_mode, Complex leading_coefficient) {
    const double denom = std::abs(leading_coefficient);
    ResponseStrengths out;
    out.spectral = spectral_norm(first_mode) / denom;
    out.physical = first_mode.frobenius_norm() / denom;
    return out;
}

double strength_function(const ModalExpansion& exp, std::size_t n, std::size_t m, std::optional<double> tol) {
    if (n < 1 || n > exp.n) throw BadOrder("strength_function: coefficient index outside 1..N");
    if (m > exp.n - 1) throw BadOrder("strength_function: mode index outside 0..N-1");
    const double t = tol.value_or(default_tolerance(exp.n));
    const double denom = std::abs(exp.coeffs.coeffs[n]);
    if (denom <= t * power_scale(exp.shifted_norm, exp.n - n))
        throw DivergentStrength("strength_function: coefficient below tolerance, strength diverges");
    return frobenius_norm_sq(exp.modes[m]) / (denom * denom);
}

double petermann_simple(const ModalExpansion& exp, std::optional<double> tol) {
    return strength_function(exp, 1, 0, tol);
}

DegeneracyReport classify(const ComplexMatrix& h, Complex eigenvalue, std::optional<double> tol_opt) {
    const std::size_t n = h.dim();
    const double tol = tol_opt.value_or(default_tolerance(n));
    const ModalExpansion exp = flv_expand(h, eigenvalue);

    if (std::abs(exp.coeffs.coeffs[0]) > tol * power_scale(exp.shifted_norm, n))
        throw NotAnEigenvalue("classify: quantization condition fails at the given energy");

    DegeneracyReport report;
    report.eigenvalue = eigenvalue;
    report.algebraic = algebraic_multiplicity(exp, tol);
    report.geometric = geometric_multiplicity(h, eigenvalue, tol);

    const FirstMode fm = max_partial_multiplicity(exp, report.algebraic, tol);
    report.max_partial = fm.max_partial;
    report.first_mode_index = fm.index;
    report.first_mode = fm.mode;
    report.leading_coefficient = exp.coeffs.coeffs[report.algebraic];

    const LeadingSectors sec = leading_sectors(fm.mode, report.leading_coefficient, fm.max_partial, tol);
    report.leading_count = sec.count;
    report.partial_strengths = sec.strengths;
    report.leading_right = sec.right;
    report.leading_left = sec.left;
    report.sectors = sec.sectors;

    const ResponseStrengths rs = response_strengths(fm.mode, report.leading_coefficient);
    report.spectral_strength = rs.spectral;
    report.physical_strength = rs.physical;

    if (report.algebraic == 1) {
        report.petermann = petermann_simple(exp, tol);
    } else if (report.max_partial == 1) {
        // generalized Petermann factor of an n-bolic point
        report.petermann = strength_function(exp, report.algebraic, report.algebraic - 1, tol);
    }
    return report;
}

} // namespace nhr
