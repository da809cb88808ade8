#pragma once

#include <stdexcept>
#include <string>

namespace pt {

// Base for every error thrown by the engine.  Catching pt::Error at the CLI
// boundary is enough to turn any engine failure into a diagnostic + exit code.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact arithmetic violations (division by zero rational, bad literal, ...).
struct ArithmeticError : Error {
    using Error::Error;
};

// Raised when symbolic-exponent arithmetic leaves the supported fragment,
// e.g. raising a multi-term sum to a symbolic power.
struct UnsupportedExponentForm : Error {
    using Error::Error;
};

// Two symbolic exponents cannot be ordered under the declared assumptions
// (eps, mu integers >= 1).  Fixing the exponent to an integer resolves it.
struct AmbiguousOrdering : Error {
    using Error::Error;
};

// Substitution bindings form a cycle (directly or transitively).
struct CyclicSubstitution : Error {
    using Error::Error;
};

// A deformation request outside the supported family (order < 1, exponent
// neither a positive integer nor a declared exponent symbol, ...).
struct UnsupportedDeformation : Error {
    using Error::Error;
};

// Dominant balance exists structurally but the leading coefficient equation
// is outside the solvable fragment (nonlinear residue after removing the
// zero root).
struct UnsupportedBalance : Error {
    using Error::Error;
};

// DSL parse failure with source position (1-based).
struct ParseError : Error {
    int line;
    int column;
    ParseError(int line_, int col_, const std::string& what_)
        : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(col_) + ": " + what_),
          line(line_), column(col_) {}
};

// An internal consistency check failed.  Always a bug, never user input.
struct InternalInvariantViolation : Error {
    using Error::Error;
};

}  // namespace pt
