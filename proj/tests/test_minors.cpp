#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "nhr/errors.hpp"
#include "nhr/linalg.hpp"
#include "nhr/minors.hpp"
#include "nhr/modal.hpp"

using namespace nhr;
using fixtures::random_matrix;

TEST_CASE("minor basics") {
    ComplexMatrix id3 = ComplexMatrix::identity(3);
    CHECK(std::abs(minor(id3, {}, {}) - Complex(1.0)) == 0.0);      // k = 0 is the determinant
    CHECK(std::abs(minor(id3, {0}, {0}) - Complex(1.0)) == 0.0);

    // shifted diabolic fixture, delete second row and column (0-based index 1)
    ComplexMatrix m = fixtures::f1_dp();
    m *= Complex(-1.0);  // 0*1 - H
    CHECK(std::abs(minor(m, {1}, {1})) < 1e-15);  // det [[-1,-1],[0,0]]
}

TEST_CASE("minor index validation") {
    ComplexMatrix id3 = ComplexMatrix::identity(3);
    CHECK_THROWS_AS(minor(id3, {0, 0}, {0, 1}), BadIndexSet);  // duplicate
    CHECK_THROWS_AS(minor(id3, {1, 0}, {0, 1}), BadIndexSet);  // unsorted
    CHECK_THROWS_AS(minor(id3, {0}, {3}), BadIndexSet);        // out of range
    CHECK_THROWS_AS(minor(id3, {0}, {1, 2}), BadIndexSet);     // length mismatch
    CHECK_THROWS_AS(minor(id3, {0, 1, 2}, {0, 1, 2}), BadIndexSet);  // k = n
}

TEST_CASE("insertion parity convention") {
    CHECK(insertion_parity(0, {1, 2}) == 1);
    CHECK(insertion_parity(2, {1, 3}) == -1);   // one inversion
    CHECK(insertion_parity(3, {1, 2}) == 1);    // two inversions
    CHECK(insertion_parity(1, {1, 2}) == 0);    // repeated index drops the term
}

TEST_CASE("partial trace direct: appendix entries") {
    std::mt19937 rng(21);
    ComplexMatrix a = random_matrix(rng, 4);

    // order-3 partial trace picks single entries with a sign
    ComplexMatrix n3 = partial_trace_direct(a, 3);
    CHECK(std::abs(n3(1, 3) + a(3, 1)) < 1e-13);  // N^(3)_{2,4} = -A_{4,2} in 1-based labels
    CHECK(std::abs(n3(1, 1) - (a(0, 0) + a(2, 2) + a(3, 3))) < 1e-13);

    // N^(n-1) = (tr a) 1 - sigma a^T sigma
    ComplexMatrix expected = sign_conjugate_transpose(a);
    expected *= Complex(-1.0);
    expected.shift_diagonal(a.trace());
    CHECK(max_abs_diff(n3, expected) < 1e-12);

    // k = n is the identity by convention
    CHECK(max_abs_diff(partial_trace_direct(a, 4), ComplexMatrix::identity(4)) == 0.0);
    CHECK_THROWS_AS(partial_trace_direct(a, 0), BadOrder);
    CHECK_THROWS_AS(partial_trace_direct(a, 5), BadOrder);
}

TEST_CASE("partial trace recursive matches direct") {
    std::mt19937 rng(22);
    for (std::size_t n = 2; n <= 6; ++n) {
        ComplexMatrix m = random_matrix(rng, n);
        const double nrm = spectral_norm(m);
        for (std::size_t k = 1; k <= n; ++k) {
            double scale = std::max(1.0, std::pow(nrm, static_cast<double>(n - k)));
            CHECK(max_abs_diff(partial_trace_recursive(m, k), partial_trace_direct(m, k)) <= 1e-9 * scale);
        }
    }

    // zero matrix: all orders below n vanish, the seed is the identity
    ComplexMatrix z = ComplexMatrix::zero(4);
    CHECK(partial_trace_recursive(z, 2).max_abs() == 0.0);
    CHECK(max_abs_diff(partial_trace_recursive(z, 4), ComplexMatrix::identity(4)) == 0.0);
}

TEST_CASE("first-order partial trace of the EP fixture") {
    // sigma [N^(1)(1*1 - H)]^T sigma reproduces the closed-form adjugate layout
    ComplexMatrix m = fixtures::f1_ep();
    m *= Complex(-1.0);
    m.shift_diagonal(Complex(1.0));
    ComplexMatrix adj = sign_conjugate_transpose(partial_trace_recursive(m, 1));
    ComplexMatrix expected(3, {Complex(0), Complex(1), Complex(1),  //
                               Complex(0), Complex(0), Complex(0),  //
                               Complex(0), Complex(0), Complex(0)});
    CHECK(max_abs_diff(adj, expected) < 1e-13);
}

TEST_CASE("partial trace explicit matches direct") {
    std::mt19937 rng(23);
    for (std::size_t n = 2; n <= 6; ++n) {
        ComplexMatrix m = random_matrix(rng, n);
        // the closed form takes the characteristic coefficients of -m
        ComplexMatrix neg = m;
        neg *= Complex(-1.0);
        Polynomial coeffs = charpoly_newton(neg, Complex(0.0));
        const double nrm = spectral_norm(m);
        for (std::size_t k = 1; k <= n; ++k) {
            double scale = std::max(1.0, std::pow(nrm, static_cast<double>(n - k)));
            CHECK(max_abs_diff(partial_trace_explicit(m, k, coeffs), partial_trace_direct(m, k)) <=
                  1e-9 * scale);
        }
        CHECK(max_abs_diff(partial_trace_explicit(m, n, coeffs), ComplexMatrix::identity(n)) == 0.0);
    }
}

TEST_CASE("explicit route on the fourfold fixture") {
    // N^(1)(-A) = sigma B0^T sigma with B0 from the recursion
    ComplexMatrix h = fixtures::f2_ep4();
    ModalExpansion exp = flv_expand(h, Complex(0.0));
    ComplexMatrix neg = h;
    neg *= Complex(-1.0);
    Polynomial coeffs = charpoly_newton(h, Complex(0.0));  // characteristic of -(-A) = A
    ComplexMatrix n1 = partial_trace_explicit(neg, 1, coeffs);
    CHECK(max_abs_diff(n1, sign_conjugate_transpose(exp.modes[0])) < 1e-13);
}

TEST_CASE("mode_from_partial_trace") {
    std::mt19937 rng(24);
    ComplexMatrix a = random_matrix(rng, 4);

    // k = 0 reproduces the adjugate of -A
    ComplexMatrix adj_direct(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            ComplexMatrix neg = a;
            neg *= Complex(-1.0);
            const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            adj_direct.at(i, j) = sign * minor(neg, {j}, {i});
        }
    CHECK(max_abs_diff(mode_from_partial_trace(a, 0), adj_direct) < 1e-11);

    // k = n-1 is the identity
    CHECK(max_abs_diff(mode_from_partial_trace(a, 3), ComplexMatrix::identity(4)) == 0.0);
    CHECK_THROWS_AS(mode_from_partial_trace(a, 4), BadOrder);

    // diabolic fixture: k = 1 equals the recursion mode
    ModalExpansion exp = flv_expand(fixtures::f1_dp(), Complex(0.0));
    CHECK(max_abs_diff(mode_from_partial_trace(exp.shifted, 1), exp.modes[1]) < 1e-12);
}

TEST_CASE("modes from partial traces equal recursion modes on random matrices") {
    std::mt19937 rng(25);
    for (std::size_t n = 2; n <= 6; ++n) {
        ComplexMatrix h = random_matrix(rng, n);
        Complex omega = fixtures::random_complex(rng);
        ModalExpansion exp = flv_expand(h, omega);
        for (std::size_t k = 0; k < n; ++k) {
            double scale = std::max(1.0, std::pow(exp.shifted_norm, static_cast<double>(n - 1 - k)));
            CHECK(max_abs_diff(mode_from_partial_trace(exp.shifted, k), exp.modes[k]) <= 1e-9 * scale);
        }
    }
}

TEST_CASE("minors vanish below the rank") {
    // rank-r matrix: all minors of order k vanish when n - k > r
    std::mt19937 rng(26);
    const std::size_t n = 5, r = 2;
    ComplexMatrix low(n);
    for (std::size_t t = 0; t < r; ++t) {
        auto col = random_matrix(rng, n);
        auto row = random_matrix(rng, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) low.at(i, j) += col(i, 0) * row(0, j);
    }
    for (std::size_t k = 1; n - k > r; ++k) {
        ComplexMatrix nt = partial_trace_direct(low, k);
        CHECK(nt.max_abs() < 1e-9);
    }
    // and the first order at which they can survive is indeed nonzero
    CHECK(partial_trace_direct(low, n - r).max_abs() > 1e-6);
}
