#pragma once

#include <stdexcept>
#include <string>

namespace phk {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: dimension mismatch, bad rational literal, bad JSON shape.
class InputError : public Error {
public:
  using Error::Error;
};

/// A point or set outside the domain of an operation (e.g. N_C(x) for x not in C).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Requested computation exceeds the documented size limit.
class UnsupportedScale : public Error {
public:
  using Error::Error;
};

/// A partially open row system whose set is empty was used where a valid set is required.
class InvalidSet : public InputError {
public:
  using InputError::InputError;
};

} // namespace phk
