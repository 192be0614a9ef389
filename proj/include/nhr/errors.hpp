#pragma once

#include <stdexcept>
#include <string>

namespace nhr {

// Failure of a numerical kernel to reach its required accuracy within the
// iteration cap.
struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

// A pivot fell below tolerance while solving a linear system.
struct SingularMatrix : std::runtime_error {
    explicit SingularMatrix(const std::string& what) : std::runtime_error(what) {}
};

// Row/column index sets for a minor are unsorted, duplicated, or out of range.
struct BadIndexSet : std::invalid_argument {
    explicit BadIndexSet(const std::string& what) : std::invalid_argument(what) {}
};

// Minor/partial-trace order outside 1..n (or mode index outside 0..n-1).
struct BadOrder : std::invalid_argument {
    explicit BadOrder(const std::string& what) : std::invalid_argument(what) {}
};

// Every mode of the expansion vanished below tolerance.
struct DegenerateInput : std::runtime_error {
    explicit DegenerateInput(const std::string& what) : std::runtime_error(what) {}
};

// The first finite mode handed to the sector decomposition is numerically zero.
struct ZeroMode : std::runtime_error {
    explicit ZeroMode(const std::string& what) : std::runtime_error(what) {}
};

// A response-strength denominator |c_n| lies below tolerance; the strength
// function diverges at the approached degeneracy.
struct DivergentStrength : std::runtime_error {
    explicit DivergentStrength(const std::string& what) : std::runtime_error(what) {}
};

// The requested reference energy is not a root of the quantization condition.
struct NotAnEigenvalue : std::runtime_error {
    explicit NotAnEigenvalue(const std::string& what) : std::runtime_error(what) {}
};

// The Green's function was requested at (numerically) a resonance energy.
struct OnResonance : std::runtime_error {
    explicit OnResonance(const std::string& what) : std::runtime_error(what) {}
};

// All sector matrix elements of a perturbation vanish; the splitting is not
// resolved at first order.
struct ZeroElement : std::runtime_error {
    explicit ZeroElement(const std::string& what) : std::runtime_error(what) {}
};

// Input file or flag could not be interpreted.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace nhr
