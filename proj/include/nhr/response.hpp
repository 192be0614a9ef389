#pragma once

#include <utility>
#include <vector>

#include "nhr/degeneracy.hpp"
#include "nhr/matrix.hpp"
#include "nhr/modal.hpp"

namespace nhr {

struct GreensEvaluation {
    Complex energy{};
    ComplexMatrix matrix;   // G(E)
    double power = 0.0;     // tr(G^dagger G)

    GreensEvaluation() : matrix(1) {}
};

struct SweepResult {
    std::vector<double> energies;
    std::vector<double> powers;
    double loss_shift = 0.0;  // uniform imaginary offset applied to h
};

/// Green's function from the uniform expansion,
/// G = sum_k (E-Omega)^k B_k / sum_k (E-Omega)^k c_k, both polynomials
/// evaluated by Horner's scheme. Throws OnResonance when the denominator is
/// below 1e-13 * max(1, |E-Omega|^n).
GreensEvaluation greens_uniform(const ModalExpansion& exp, Complex energy);

/// Direct-solve oracle: (E*1 - h)^{-1} via lu_solve. Throws SingularMatrix
/// at resonance.
GreensEvaluation greens_direct(const ComplexMatrix& h, Complex energy);

/// Response power on a real-energy grid for h shifted by a uniform
/// background loss. The shift is chosen so the longest-living state of the
/// shifted spectrum has decay rate min_i(-Im E_i)/2 = loss.
SweepResult power_sweep(const ComplexMatrix& h, double e_min, double e_max, int steps, double loss);

/// Leading-order resonant response power, eta^2 / |E - E_i|^(2 ell).
double leading_power(const DegeneracyReport& report, Complex energy);

/// Least-squares slope of log P versus log |E - eigenvalue| on a geometric
/// grid inside `window`, approaching the eigenvalue along a fixed ray.
/// Near a pole of order ell this converges to -2*ell.
double loglog_slope(const ComplexMatrix& h, Complex eigenvalue, std::pair<double, double> window,
                    int samples);

} // namespace nhr
