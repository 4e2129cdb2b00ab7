#pragma once

#include <stdexcept>
#include <string>

namespace ingraph {

// Caller passed arguments that violate an operation's contract
// (mismatched fields, out-of-range exponents, malformed input files).
// The CLI maps these to exit code 2.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The request is mathematically undefined (inverse of zero, inverse of a
// singular matrix, span of nothing).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// An operation is outside the supported range of the theory
// (decomposition below ambient dimension 3).
struct UnsupportedError : UsageError {
    using UsageError::UsageError;
};

// An internal consistency check failed mid-algorithm. Either the input was
// corrupt in a way the preconditions missed or there is a bug; never ignored.
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ingraph
