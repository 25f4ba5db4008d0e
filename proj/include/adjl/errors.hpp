#pragma once

#include <stdexcept>
#include <string>

namespace adjl {

// Failure taxonomy. The CLI maps these onto its exit-code contract:
//   input/precondition problems -> 1, unsupported requests -> 2,
//   internal cross-check failures -> 3, resource limits -> 4.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands built over different rings or incompatible coefficient fields.
struct AmbientMismatchError : Error {
    explicit AmbientMismatchError(const std::string& msg) : Error(msg) {}
};

// A documented precondition of an operation does not hold for the input.
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// The request is well-formed but outside the supported fragment
// (dimension > 4, non-monomial input in >2 variables, method/input clash).
struct UnsupportedError : Error {
    explicit UnsupportedError(const std::string& msg) : Error(msg) {}
};

// Factor splitting beyond the supported bound over an extension field.
struct UnsupportedSplittingError : UnsupportedError {
    explicit UnsupportedSplittingError(const std::string& msg) : UnsupportedError(msg) {}
};

// Base-point search could not resolve a point; names the offending point.
struct PartialConstellationError : UnsupportedError {
    PartialConstellationError(const std::string& msg, std::string point)
        : UnsupportedError(msg + " [at point " + point + "]"), pointPath(std::move(point)) {}
    std::string pointPath;
};

// A configured work cap (pair limit, enumeration box, recursion depth) was hit.
struct ResourceLimitError : Error {
    explicit ResourceLimitError(const std::string& msg) : Error(msg) {}
};

// An internal consistency verification failed; indicates a bug, never silent.
struct InternalCheckError : Error {
    explicit InternalCheckError(const std::string& msg) : Error(msg) {}
};

// No reduction found after exhausting all deterministic coefficient schedules.
struct NoReductionError : InternalCheckError {
    explicit NoReductionError(const std::string& msg) : InternalCheckError(msg) {}
};

// Text input (expression or corpus line) failed to parse; carries position.
struct ParseError : Error {
    ParseError(const std::string& msg, int line, int col)
        : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
          line(line), col(col) {}
    int line;
    int col;
};

}  // namespace adjl
