#pragma once

#include <optional>
#include <vector>

#include "nhr/matrix.hpp"
#include "nhr/modal.hpp"

namespace nhr {

/// Complete per-eigenvalue record of the degeneracy scenario and the
/// response data carried by the first finite mode.
struct DegeneracyReport {
    Complex eigenvalue{};                 // reference energy the report was evaluated at
    std::size_t algebraic = 0;            // order of the root of the quantization condition
    std::size_t geometric = 0;            // independent eigenvectors, n - rank
    std::size_t max_partial = 0;          // largest Jordan sub-block size
    std::size_t leading_count = 0;        // eigenvectors attaining max_partial (rank of first mode)
    Complex leading_coefficient{};        // first nonvanishing polynomial coefficient
    std::size_t first_mode_index = 0;     // algebraic - max_partial
    std::vector<double> partial_strengths;  // per-sector strengths, descending
    double spectral_strength = 0.0;       // ||first mode||_2 / |leading coefficient|
    double physical_strength = 0.0;       // sqrt(tr(mode^dagger mode)) / |leading coefficient|
    std::optional<double> petermann;      // set for simple eigenvalues and for max_partial == 1
    std::vector<std::vector<Complex>> leading_right;  // unit right vectors
    std::vector<std::vector<Complex>> leading_left;   // unit left (bra) vectors
    ComplexMatrix first_mode;             // the first finite mode itself
    std::vector<ComplexMatrix> sectors;   // rank-one sector matrices summing to first_mode

    DegeneracyReport() : first_mode(1) {}
};

/// Default vanishing tolerance of the classification pipeline. All
/// coefficient and mode thresholds scale this by powers of ||A||_2 so that
/// classification is invariant under h -> c*h.
double default_tolerance(std::size_t n);

/// Smallest k with |c_k| above tol * max(1, ||A||^(n-k)); 0 when omega is
/// not an eigenvalue at this tolerance.
std::size_t algebraic_multiplicity(const ModalExpansion& exp, double tol);

/// n - numerical_rank(eigenvalue*1 - h). tol, when given, is relative to
/// the spectral norm of the shifted matrix.
std::size_t geometric_multiplicity(const ComplexMatrix& h, Complex eigenvalue,
                                   std::optional<double> tol = std::nullopt);

struct FirstMode {
    std::size_t max_partial = 0;   // alpha - index
    std::size_t index = 0;         // position of the first finite mode
    ComplexMatrix mode;

    FirstMode() : mode(1) {}
};

/// Scans the modes for the first one above tolerance; its index fixes the
/// maximal partial multiplicity. Throws DegenerateInput if the scan
/// overshoots (possible only with an inconsistent alpha or absurd tol).
FirstMode max_partial_multiplicity(const ModalExpansion& exp, std::size_t alpha, double tol);

struct LeadingSectors {
    std::size_t count = 0;                   // number of leading eigenvectors
    std::vector<double> strengths;           // descending
    std::vector<std::vector<Complex>> right;
    std::vector<std::vector<Complex>> left;
    std::vector<ComplexMatrix> sectors;      // sum to the first mode
};

/// Decomposes the first finite mode into leading-eigenvector sectors.
/// max_partial == 1: spectral decomposition (finite eigenvalues with
/// biorthogonal eigenvector pairs). max_partial > 1: singular sectors
/// sigma_j u_j v_j^dagger. Throws ZeroMode when the mode is below tolerance.
LeadingSectors leading_sectors(const ComplexMatrix& first_mode, Complex leading_coefficient,
                               std::size_t max_partial, double tol);

struct ResponseStrengths {
    double spectral = 0.0;
    double physical = 0.0;
};

ResponseStrengths response_strengths(const ComplexMatrix& first_mode, Complex leading_coefficient);

/// Hierarchy member |eta^(n,m)|^2 = tr(B_m^dagger B_m) / |c_n|^2.
/// Throws DivergentStrength when |c_n| is below tolerance, which signals
/// the approached degeneracy. Throws BadOrder outside 1<=n<=N, 0<=m<=N-1.
double strength_function(const ModalExpansion& exp, std::size_t n, std::size_t m,
                         std::optional<double> tol = std::nullopt);

/// Petermann factor of a simple eigenvalue, tr(B_0^dagger B_0)/|c_1|^2.
double petermann_simple(const ModalExpansion& exp, std::optional<double> tol = std::nullopt);

/// Full classification at one eigenvalue. Throws NotAnEigenvalue when the
/// quantization condition fails at the given reference energy.
DegeneracyReport classify(const ComplexMatrix& h, Complex eigenvalue,
                          std::optional<double> tol = std::nullopt);

} // namespace nhr
