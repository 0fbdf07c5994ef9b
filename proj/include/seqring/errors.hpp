#pragma once

#include <stdexcept>
#include <string>

namespace seqring {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised by the text parsers; carries the byte offset of the offending token.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// Evaluation of a rational function at one of its finitely many poles.
struct PoleError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

struct ZeroPolynomialError : Error {
    using Error::Error;
};

/// Equation with vanishing trailing coefficient h_0.
struct InvalidEquationError : Error {
    using Error::Error;
};

/// System matrix with identically zero determinant.
struct SingularSystemError : Error {
    using Error::Error;
};

/// Numeric matrix with zero determinant where an inverse was required.
struct SingularMatrixError : Error {
    using Error::Error;
};

struct InsufficientDataError : Error {
    using Error::Error;
};

/// Two fundamental matrices whose transition matrix is not constant.
/// Signals a defect: cannot occur for valid fundamental matrices.
struct NotConstantError : Error {
    using Error::Error;
};

struct NotASolutionError : Error {
    using Error::Error;
};

struct EmptyOverlapError : Error {
    using Error::Error;
};

/// Orbit point outside the domain of definition of the self-map.
struct UndefinedOrbitError : Error {
    using Error::Error;
};

struct WindowTooSmallError : Error {
    using Error::Error;
};

} // namespace seqring
