#pragma once

#include <vector>

#include "nhr/degeneracy.hpp"
#include "nhr/matrix.hpp"

namespace nhr {

struct PolygonSector {
    Complex element{};              // sector matrix element of the perturbation
    double radius = 0.0;            // |epsilon * element / leading coefficient|^(1/ell)
    double rotation = 0.0;          // principal-branch argument of the same root
    std::vector<Complex> vertices;  // ell energies, equally spaced in angle
};

struct PolygonPrediction {
    double epsilon = 0.0;
    std::vector<PolygonSector> sectors;
    std::vector<Complex> exact_roots;  // all n perturbed eigenvalues
    double matched_error = 0.0;        // max over vertices of distance to nearest exact root
};

/// tr(sector * h_prime): the component of the perturbation the given sector
/// responds to at first order.
Complex sector_element(const ComplexMatrix& b_star_sector, const ComplexMatrix& h_prime);

/// Predicted polygon vertices for the perturbed eigenvalues of
/// h0 + epsilon*h_prime around report.eigenvalue, one regular ell-gon per
/// sector, against the exact roots of the perturbed quantization condition.
/// Root convention: det(M - eps H') = det M - eps tr(adj(M) H') + O(eps^2)
/// gives lambda^ell = +eps*h_j/c_alpha. Throws ZeroElement when every
/// sector element vanishes.
PolygonPrediction predict_polygons(const ComplexMatrix& h0, const ComplexMatrix& h_prime,
                                   double epsilon, const DegeneracyReport& report);

} // namespace nhr
