#pragma once

#include <stdexcept>
#include <string>

namespace binform {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Negative exponents, zero denominators and similar misuse of exact arithmetic.
struct DomainError : Error {
    using Error::Error;
};

// Non-square matrices, non-homogeneous covariants.
struct ShapeError : Error {
    using Error::Error;
};

// Transvectant index or construction order outside the valid range.
struct RangeError : Error {
    using Error::Error;
};

// A variable that is not legal under the active form context.
struct ContextError : Error {
    using Error::Error;
};

// Substitution hit a variable without a binding.
struct MissingBindingError : Error {
    explicit MissingBindingError(const std::string& variable)
        : Error("no binding for variable '" + variable + "'"), variable(variable) {}
    std::string variable;
};

// A polynomial failed a certification check (kernel, homogeneity, isobaricity).
struct CertificationError : Error {
    using Error::Error;
};

// Invariant violations that indicate a bug, e.g. a non-exact division inside
// fraction-free elimination.  Never swallowed.
struct InternalError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& message, int line, int column)
        : Error(message + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line(line), column(column) {}
    int line;
    int column;
};

}  // namespace binform
