#pragma once

#include <stdexcept>
#include <string>

namespace spiky {

// Mixed-dimension inputs.
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An argument outside the mathematical domain of an operation (e.g. a vertex
// inside the unit ball, a cap radius outside (0, pi)).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Input is well-formed but violates an operation's stated precondition
// (family not pairwise intersecting, spiky ball not a cap body, ...).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A constructed artifact failed its own certificate.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured size limit was hit before the construction finished.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed artifact file or report.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace spiky
