#pragma once

#include <vector>

#include "nhr/matrix.hpp"

namespace nhr {

/// Polynomial in one complex variable; coeffs[k] multiplies z^k.
/// Characteristic polynomials in this project are monic (coeffs.back() == 1).
struct Polynomial {
    std::vector<Complex> coeffs;

    Polynomial() = default;
    explicit Polynomial(std::vector<Complex> c) : coeffs(std::move(c)) {}

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

    Complex eval(Complex z) const;
    Polynomial derivative() const;

    /// sum_k |c_k| |z|^k, the natural backward-error scale of eval at z.
    double eval_scale(Complex z) const;
};

/// All roots (with multiplicity) via simultaneous Aberth-Ehrlich iteration
/// from perturbed-circle initial guesses. Exact zero trailing coefficients
/// are deflated first, so exact roots at the origin come back exactly.
/// Result is sorted by (Re, Im). Each root r satisfies
/// |p(r)| <= 1e-10 * eval_scale(r); otherwise NoConvergence is thrown.
std::vector<Complex> aberth_roots(const Polynomial& p);

/// Single-linkage clustering of a point set with the given merge radius.
/// Returns clusters as index lists, each cluster ordered, clusters ordered by
/// their first member; used to group nearly degenerate roots.
std::vector<std::vector<std::size_t>> cluster_points(const std::vector<Complex>& pts, double radius);

} // namespace nhr
