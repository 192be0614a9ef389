#include "nhr/perturb.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "nhr/errors.hpp"
#include "nhr/modal.hpp"

namespace nhr {

Complex sector_element(const ComplexMatrix& b_star_sector, const ComplexMatrix& h_prime) {
    return trace_of_product(b_star_sector, h_prime);
}

PolygonPrediction predict_polygons(const ComplexMatrix& h0, const ComplexMatrix& h_prime,
                                   double epsilon, const DegeneracyReport& report) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("predict_polygons: epsilon must be positive");
    const std::size_t ell = report.max_partial;

    PolygonPrediction out;
    out.epsilon = epsilon;

    const double element_floor = 1e-14 * std::max(1.0, report.first_mode.frobenius_norm()) *
                                 std::max(1.0, h_prime.frobenius_norm());
    bool any_sector = false;
    for (const ComplexMatrix& sector : report.sectors) {
        const Complex element = sector_element(sector, h_prime);
        if (std::abs(element) <= element_floor) continue;
        any_sector = true;

        const Complex shift_pow = epsilon * element / report.leading_coefficient;
        const double radius = std::pow(std::abs(shift_pow), 1.0 / static_cast<double>(ell));
        const double rotation = std::arg(shift_pow) / static_cast<double>(ell);

        PolygonSector poly;
        poly.element = element;
        poly.radius = radius;
        poly.rotation = rotation;
        for (std::size_t k = 0; k < ell; ++k) {
            const double angle = rotation + 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(ell);
            poly.vertices.push_back(report.eigenvalue + radius * Complex(std::cos(angle), std::sin(angle)));
        }
        out.sectors.push_back(std::move(poly));
    }
    if (!any_sector)
        throw ZeroElement("predict_polygons: perturbation does not couple to any leading sector at first order");

    ComplexMatrix perturbed = h0;
    ComplexMatrix scaled = h_prime;
    scaled *= Complex(epsilon, 0.0);
    perturbed += scaled;
    out.exact_roots = eigenvalues(perturbed);

    double worst = 0.0;
    for (const PolygonSector& poly : out.sectors)
        for (Complex v : poly.vertices) {
            double best = std::numeric_limits<double>::infinity();
            for (Complex r : out.exact_roots) best = std::min(best, std::abs(v - r));
            worst = std::max(worst, best);
        }
    out.matched_error = worst;
    return out;
}

} // namespace nhr
