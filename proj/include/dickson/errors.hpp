#pragma once

#include <stdexcept>
#include <string>

namespace dickson {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact-arithmetic side.
struct DivisionByZero : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// Polynomial families / functional equations.
struct DegenerateInput : Error { using Error::Error; };

// Prime fields.
struct ModulusMismatch : Error { using Error::Error; };
struct BoundExceeded : Error { using Error::Error; };
struct NotPrime : Error { using Error::Error; };

// ODE engine.
struct UnsupportedIndex : Error { using Error::Error; };
struct EmptyBasis : Error { using Error::Error; };
struct ZeroParameter : Error { using Error::Error; };

// Numeric special functions.
struct PoleError : Error { using Error::Error; };
struct ConvergenceError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct ParameterPole : Error { using Error::Error; };
struct IllConditioned : Error { using Error::Error; };

// Reporting.
struct FormatUnsupported : Error { using Error::Error; };

}  // namespace dickson
