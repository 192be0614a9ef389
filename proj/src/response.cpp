#include "nhr/response.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "nhr/errors.hpp"
#include "nhr/linalg.hpp"

namespace nhr {

GreensEvaluation greens_uniform(const ModalExpansion& exp, Complex energy) {
    const Complex lambda = energy - exp.omega;
    const Complex denom = exp.coeffs.eval(lambda);
    double floor = 1.0;
    for (std::size_t k = 0; k < exp.n; ++k) floor *= std::abs(lambda);
    if (std::abs(denom) < 1e-13 * std::max(1.0, floor))
        throw OnResonance("greens_uniform: energy numerically on resonance");

    GreensEvaluation out;
    out.energy = energy;
    out.matrix = adjugate_at(exp, energy);
    out.matrix *= 1.0 / denom;
    out.power = frobenius_norm_sq(out.matrix);
    return out;
}

GreensEvaluation greens_direct(const ComplexMatrix& h, Complex energy) {
    const std::size_t n = h.dim();
    ComplexMatrix lhs = h;
    lhs *= Complex(-1.0, 0.0);
    lhs.shift_diagonal(energy);
    GreensEvaluation out;
    out.energy = energy;
    out.matrix = lu_solve(lhs, ComplexMatrix::identity(n));
    out.power = frobenius_norm_sq(out.matrix);
    return out;
}

SweepResult power_sweep(const ComplexMatrix& h, double e_min, double e_max, int steps, double loss) {
    if (steps < 2) throw std::invalid_argument("power_sweep: steps must be >= 2");
    if (loss < 0.0) throw std::invalid_argument("power_sweep: loss must be >= 0");
    if (!(e_max > e_min)) throw std::invalid_argument("power_sweep: empty energy range");

    double slowest_decay = std::numeric_limits<double>::infinity();
    for (Complex ev : eigenvalues(h)) slowest_decay = std::min(slowest_decay, -ev.imag());
    const double shift = 2.0 * loss - slowest_decay;

    ComplexMatrix damped = h;
    damped.shift_diagonal(Complex(0.0, -shift));
    const ModalExpansion exp = flv_expand(damped, damped.trace() / static_cast<double>(h.dim()));

    SweepResult out;
    out.loss_shift = shift;
    out.energies.reserve(static_cast<std::size_t>(steps));
    out.powers.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        const double e = e_min + (e_max - e_min) * static_cast<double>(i) / static_cast<double>(steps - 1);
        out.energies.push_back(e);
        out.powers.push_back(greens_uniform(exp, Complex(e, 0.0)).power);
    }
    return out;
}

double leading_power(const DegeneracyReport& report, Complex energy) {
    const double dist = std::abs(energy - report.eigenvalue);
    double denom = 1.0;
    for (std::size_t i = 0; i < 2 * report.max_partial; ++i) denom *= dist;
    return report.physical_strength * report.physical_strength / denom;
}

double loglog_slope(const ComplexMatrix& h, Complex eigenvalue, std::pair<double, double> window,
                    int samples) {
    if (samples < 2) throw std::invalid_argument("loglog_slope: need at least two samples");
    if (!(window.first > 0.0 && window.second > window.first))
        throw std::invalid_argument("loglog_slope: window must satisfy 0 < lo < hi");

    const ModalExpansion exp = flv_expand(h, eigenvalue);
    const Complex direction(std::cos(0.4), std::sin(0.4));
    const double ratio = window.second / window.first;

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double r = window.first * std::pow(ratio, static_cast<double>(i) / static_cast<double>(samples - 1));
        const double p = greens_uniform(exp, eigenvalue + r * direction).power;
        const double x = std::log(r);
        const double y = std::log(p);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(samples);
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace nhr
