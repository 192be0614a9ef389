#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nhr/degeneracy.hpp"
#include "nhr/matrix.hpp"
#include "nhr/modal.hpp"
#include "nhr/perturb.hpp"
#include "nhr/response.hpp"

namespace nhr {

/// Fixed formatting used for every number we emit: printf "%.17g", which
/// round-trips any double.
std::string format_double(double x);

/// FNV-1a 64-bit digest of a byte string, as 16 lowercase hex digits.
std::string fnv1a_digest(const std::string& bytes);

/// MatrixFile JSON: {"entries": [[[re,im],...],...], "n": N}. Throws
/// ParseError on schema violations, ragged rows, or non-finite entries.
ComplexMatrix parse_matrix_json(const std::string& text);

/// Escape hatch: n rows of 2n comma-separated reals (re,im pairs).
ComplexMatrix parse_matrix_csv_reim(const std::string& text);

/// Canonical MatrixFile serialization (sorted keys, format_double numbers).
std::string format_matrix_json(const ComplexMatrix& m);

/// Reads a file fully; ParseError when it cannot be opened.
std::string read_file(const std::string& path);

/// -------- mode dump document --------
struct ModesDocument {
    Complex omega{};
    std::size_t n = 0;
    std::vector<Complex> coeffs;
    std::vector<ComplexMatrix> modes;
};

ModesDocument modes_document(const ModalExpansion& exp);
std::string format_modes_document(const ModesDocument& doc);
ModesDocument parse_modes_document(const std::string& text);

/// -------- analyze report document --------
struct StrengthEntry {
    std::size_t n = 0;
    std::size_t m = 0;
    std::optional<double> value;  // nullopt marks a divergent entry
};

struct AnalyzeDocument {
    std::string version;
    std::string input_digest;
    double tolerance = 0.0;
    std::vector<DegeneracyReport> reports;
    std::vector<std::vector<StrengthEntry>> strength_tables;  // parallel to reports
};

std::string format_analyze_document(const AnalyzeDocument& doc);

std::string format_perturb_document(const PolygonPrediction& prediction);

/// CSV sweep: header "E,P", one row per grid point, '\n' line ends.
std::string format_sweep_csv(const SweepResult& sweep);

} // namespace nhr
