#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxenergy {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid values: negative entries where nonnegativity is required,
/// non-finite input, composite numbers where a prime is required.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Shape violations: non-square or asymmetric input, index out of range.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A stated operation precondition does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Numerical failure: non-convergence, residual beyond tolerated roundoff.
class NumericError : public Error {
public:
    using Error::Error;
};

/// Integer search left the supported range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Malformed text input; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace maxenergy
