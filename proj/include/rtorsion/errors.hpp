#pragma once

#include <stdexcept>
#include <string>

namespace rtorsion {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input (polynomials, words, slopes, indices).
class ParseError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Exact division left a nonzero remainder.
class DivisionError : public Error {
public:
    using Error::Error;
};

/// A mathematical property that was expected to hold failed to hold.
/// The computation itself succeeded; the certificate is negative.
class VerificationError : public Error {
public:
    using Error::Error;
};

/// Numeric iteration did not reach the requested accuracy.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

}  // namespace rtorsion
