#include "doctest.h"

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "nhr/polynomial.hpp"

using namespace nhr;

TEST_CASE("aberth on stated cases") {
    // lambda^2 - 1
    Polynomial p({Complex(-1), Complex(0), Complex(1)});
    auto roots = aberth_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(std::abs(roots[0] + Complex(1.0)) < 1e-12);
    CHECK(std::abs(roots[1] - Complex(1.0)) < 1e-12);

    // characteristic polynomial of the diabolic fixture: E^3 - 2 E^2
    Polynomial dp({Complex(0), Complex(0), Complex(-2), Complex(1)});
    roots = aberth_roots(dp);
    REQUIRE(roots.size() == 3);
    CHECK(std::abs(roots[0]) == 0.0);  // exact-zero deflation
    CHECK(std::abs(roots[1]) == 0.0);
    CHECK(std::abs(roots[2] - Complex(2.0)) < 1e-12);

    // (lambda + 1)(lambda^2 - eps), eps = 1e-4
    const double eps = 1e-4;
    Polynomial q({Complex(-eps), Complex(-eps), Complex(1), Complex(1)});
    roots = aberth_roots(q);
    REQUIRE(roots.size() == 3);
    CHECK(std::abs(roots[0] + Complex(1.0)) < 1e-10);
    CHECK(std::abs(roots[1] + Complex(0.01)) < 1e-10);
    CHECK(std::abs(roots[2] - Complex(0.01)) < 1e-10);
}

TEST_CASE("aberth input validation") {
    CHECK_THROWS_AS(aberth_roots(Polynomial({Complex(1)})), std::invalid_argument);
    CHECK_THROWS_AS(aberth_roots(Polynomial({Complex(1), Complex(0)})), std::invalid_argument);
}

TEST_CASE("elementary symmetric functions reproduce the coefficients") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> mag(0.5, 2.0);
    std::uniform_real_distribution<double> angle(0.0, 6.28318530717958648);
    for (std::size_t deg = 2; deg <= 10; ++deg) {
        // well-separated roots on staggered rings
        std::vector<Complex> roots;
        for (std::size_t k = 0; k < deg; ++k) {
            const double a = angle(rng);
            const double r = mag(rng) + static_cast<double>(k);
            roots.push_back(Complex(r * std::cos(a), r * std::sin(a)));
        }
        Polynomial p = fixtures::poly_from_roots(roots);
        auto found = aberth_roots(p);
        Polynomial rebuilt = fixtures::poly_from_roots(found);
        for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
            const double scale = std::max(1.0, std::abs(p.coeffs[k]));
            CHECK(std::abs(rebuilt.coeffs[k] - p.coeffs[k]) <= 1e-8 * scale);
        }
    }
}

TEST_CASE("residual guarantee at the returned roots") {
    Polynomial p({Complex(2, 1), Complex(-3), Complex(0, 2), Complex(1)});
    for (Complex r : aberth_roots(p)) CHECK(std::abs(p.eval(r)) <= 1e-10 * p.eval_scale(r));
}

TEST_CASE("cluster_points single linkage") {
    std::vector<Complex> pts{Complex(0.0), Complex(1e-9), Complex(1.0), Complex(1.0, 2e-9)};
    auto clusters = cluster_points(pts, 1e-7);
    REQUIRE(clusters.size() == 2);
    CHECK(clusters[0].size() == 2);
    CHECK(clusters[1].size() == 2);

    // chaining through midpoints merges
    std::vector<Complex> chain{Complex(0.0), Complex(0.9e-7), Complex(1.8e-7)};
    CHECK(cluster_points(chain, 1e-7).size() == 1);
}
