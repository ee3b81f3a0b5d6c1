#pragma once

#include <stdexcept>
#include <string>

namespace liedegen {

/// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed coefficient expression or use of an undeclared symbol.
class SyntaxError : public Error {
public:
    using Error::Error;
};

/// Division by the zero polynomial or the zero scalar.
class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

/// A substitution or limit hit a vanishing denominator.
class PoleError : public Error {
public:
    PoleError(const std::string& what, std::string factor)
        : Error(what), offending_factor_(std::move(factor)) {}

    const std::string& offending_factor() const { return offending_factor_; }

private:
    std::string offending_factor_;
};

/// Incompatible matrix/vector dimensions.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Inverse of a matrix whose determinant is the zero scalar.
class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// Case the exact machinery deliberately refuses (irrational eigenvalues,
/// t-dependent operators in semisimplicity tests, ...).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// Violation of a documented file schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Structurally valid input that breaks a mathematical precondition
/// (complement vector inside the ideal, non-ideal subspace, ...).
class InvalidInputError : public Error {
public:
    using Error::Error;
};

}  // namespace liedegen
