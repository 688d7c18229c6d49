#pragma once

#include <stdexcept>
#include <string>

namespace tkiss {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied parameter is outside the documented domain.
class ParameterError : public Error {
public:
  using Error::Error;
};

/// An index or window falls outside a precomputed table.
class RangeError : public Error {
public:
  using Error::Error;
};

/// A precondition of a geometric operation does not hold.
class ContractViolation : public Error {
public:
  using Error::Error;
};

/// Integer arithmetic left the 64-bit range.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// A value violates the invariant of its type (degenerate rect, wrong piece size, ...).
class InvariantViolation : public Error {
public:
  using Error::Error;
};

/// The construction produced something the placement argument says it cannot.
class ConstructionError : public Error {
public:
  using Error::Error;
};

/// Input text is not JSON, or is JSON of the wrong shape.
class MalformedDocument : public Error {
public:
  using Error::Error;
};

class SchemaVersionMismatch : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

} // namespace tkiss
