#pragma once

#include <stdexcept>
#include <string>

namespace wavefront {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// D or g violate the required sign pattern, or a zero cannot be bracketed.
class StructureViolation : public Error {
 public:
  using Error::Error;
};

/// Operation called in the wrong regime (e.g. admissible set without P(1) > P(0)).
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of a map (density outside the admissible interval, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class IntegrationFailure : public Error {
 public:
  using Error::Error;
};

/// z reached zero strictly inside a band where the vector field forbids it.
class NonNegativeExcursion : public Error {
 public:
  using Error::Error;
};

class BracketFailure : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Invalid invasion-model parameters.
class ParamError : public Error {
 public:
  using Error::Error;
};

/// A speed result does not satisfy the jump conditions it claims to satisfy.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace wavefront
