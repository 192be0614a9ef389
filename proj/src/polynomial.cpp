#include "nhr/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "nhr/errors.hpp"

namespace nhr {

Complex Polynomial::eval(Complex z) const {
    Complex acc(0.0, 0.0);
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
    return acc;
}

Polynomial Polynomial::derivative() const {
    Polynomial d;
    if (coeffs.size() <= 1) {
        d.coeffs = {Complex(0.0, 0.0)};
        return d;
    }
    d.coeffs.resize(coeffs.size() - 1);
    for (std::size_t k = 1; k < coeffs.size(); ++k)
        d.coeffs[k - 1] = static_cast<double>(k) * coeffs[k];
    return d;
}

double Polynomial::eval_scale(Complex z) const {
    const double az = std::abs(z);
    double acc = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * az + std::abs(coeffs[k]);
    return acc;
}

std::vector<Complex> aberth_roots(const Polynomial& input) {
    if (input.coeffs.size() < 2) throw std::invalid_argument("aberth_roots: degree must be >= 1");
    if (input.coeffs.back() == Complex(0.0, 0.0))
        throw std::invalid_argument("aberth_roots: leading coefficient must be nonzero");

    // Deflate exact roots at the origin (bitwise-zero trailing coefficients).
    std::size_t zeros_at_origin = 0;
    while (zeros_at_origin < input.degree() && input.coeffs[zeros_at_origin] == Complex(0.0, 0.0))
        ++zeros_at_origin;

    Polynomial p;
    p.coeffs.assign(input.coeffs.begin() + static_cast<std::ptrdiff_t>(zeros_at_origin), input.coeffs.end());
    // normalize to monic for the iteration
    const Complex lead = p.coeffs.back();
    for (Complex& c : p.coeffs) c /= lead;

    std::vector<Complex> roots(zeros_at_origin, Complex(0.0, 0.0));
    const std::size_t deg = p.degree();
    if (deg > 0) {
        const Polynomial dp = p.derivative();

        double radius = 1.0;
        const double a0 = std::abs(p.coeffs.front());
        if (a0 > 0.0) radius = std::pow(a0, 1.0 / static_cast<double>(deg));
        radius = std::max(radius, 1e-150);

        // Perturbed-circle initial guesses; the jitter breaks symmetric stalls
        // and is drawn from a fixed seed so runs are reproducible.
        std::mt19937 rng(0x9e3779b9u);
        std::uniform_real_distribution<double> jitter(-1e-3, 1e-3);
        std::vector<Complex> z(deg);
        for (std::size_t k = 0; k < deg; ++k) {
            const double angle = 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.37) / static_cast<double>(deg);
            z[k] = radius * (1.0 + jitter(rng)) * Complex(std::cos(angle), std::sin(angle)) +
                   radius * Complex(jitter(rng), jitter(rng));
        }

        const int iteration_cap = 200;
        for (int it = 0; it < iteration_cap; ++it) {
            double worst_step = 0.0;
            for (std::size_t i = 0; i < deg; ++i) {
                const Complex pv = p.eval(z[i]);
                if (pv == Complex(0.0, 0.0)) continue;
                Complex dv = dp.eval(z[i]);
                if (dv == Complex(0.0, 0.0)) dv = Complex(1e-30, 0.0);
                const Complex newton = pv / dv;
                Complex repulse(0.0, 0.0);
                for (std::size_t j = 0; j < deg; ++j) {
                    if (j == i) continue;
                    Complex diff = z[i] - z[j];
                    if (diff == Complex(0.0, 0.0)) diff = Complex(1e-30, 0.0);
                    repulse += 1.0 / diff;
                }
                const Complex denom = 1.0 - newton * repulse;
                const Complex step = (denom == Complex(0.0, 0.0)) ? newton : newton / denom;
                z[i] -= step;
                worst_step = std::max(worst_step, std::abs(step) / (1.0 + std::abs(z[i])));
            }
            if (worst_step <= 1e-16) break;
        }

        for (std::size_t i = 0; i < deg; ++i) {
            const double residual = std::abs(p.eval(z[i]));
            if (residual > 1e-10 * std::max(p.eval_scale(z[i]), 1e-300))
                throw NoConvergence("aberth_roots: residual above tolerance after iteration cap");
        }
        roots.insert(roots.end(), z.begin(), z.end());
    }

    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

std::vector<std::vector<std::size_t>> cluster_points(const std::vector<Complex>& pts, double radius) {
    const std::size_t n = pts.size();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(pts[i] - pts[j]) <= radius) parent[find(i)] = find(j);

    std::vector<std::vector<std::size_t>> clusters;
    std::vector<std::ptrdiff_t> slot(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = find(i);
        if (slot[root] < 0) {
            slot[root] = static_cast<std::ptrdiff_t>(clusters.size());
            clusters.emplace_back();
        }
        clusters[static_cast<std::size_t>(slot[root])].push_back(i);
    }
    return clusters;
}

} // namespace nhr
