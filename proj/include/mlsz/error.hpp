#pragma once

#include <stdexcept>
#include <string>

namespace mlsz {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad arguments: out-of-domain parameters, regime mismatch, malformed input.
class DomainError : public Error {
public:
    using Error::Error;
};

class RegimeError : public DomainError {
public:
    using DomainError::DomainError;
};

// Numerical failures below.
class NumericError : public Error {
public:
    using Error::Error;
};

class TruncationError : public NumericError {
public:
    using NumericError::NumericError;
};

class OverflowError : public NumericError {
public:
    using NumericError::NumericError;
};

class BracketError : public NumericError {
public:
    using NumericError::NumericError;
};

class BoundaryZeroError : public NumericError {
public:
    using NumericError::NumericError;
};

class ConvergenceError : public NumericError {
public:
    using NumericError::NumericError;
};

}  // namespace mlsz
