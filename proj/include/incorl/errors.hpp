#pragma once

#include <stdexcept>
#include <string>

namespace incorl {

// Root of the library's failure hierarchy. Subclasses let callers (and the
// CLI exit-code mapping) tell contract violations apart without string
// matching.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// File does not follow the expected container layout (bad magic, truncated
// header, unparseable manifest).
class FormatError : public Error {
public:
    using Error::Error;
};

// File parses but its pieces disagree with each other (payload size vs
// manifest dims, non-finite values, shape mismatch against a config).
class IntegrityError : public Error {
public:
    using Error::Error;
};

// Invalid configuration value or combination.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Operand dimensions do not line up.
class ShapeError : public Error {
public:
    using Error::Error;
};

// A required optional field (e.g. ncsnr) is absent.
class MissingFieldError : public Error {
public:
    using Error::Error;
};

// An operation produced a legal but empty result where emptiness is an error.
class EmptyResultError : public Error {
public:
    using Error::Error;
};

// Input is degenerate for the requested computation (zero-variance voxel,
// constant target vector).
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

// Not enough samples to satisfy a size precondition (p+q > S, p < folds).
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

// Non-finite values appeared where finite arithmetic was required.
class NumericError : public Error {
public:
    using Error::Error;
};

// Caller violated an operation contract (e.g. loss on responseless queries).
class ContractError : public Error {
public:
    using Error::Error;
};

// Filesystem-level failure.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace incorl
