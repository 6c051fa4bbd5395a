#pragma once

#include <stdexcept>
#include <string>

namespace seedga {

/// Base of every error the library throws.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A problem instance that cannot be used (too few places, bad alphabet).
class InvalidInstanceError : public Error {
  public:
    using Error::Error;
};

/// A chromosome that breaks its encoding invariants.
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// Two input records that disagree (e.g. contradictory duplicate edges).
class ConflictError : public Error {
  public:
    using Error::Error;
};

/// An edge list that leaves some pair of places without a distance.
class IncompleteInstanceError : public Error {
  public:
    using Error::Error;
};

/// An argument outside the operation's domain.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// An instance too large for exhaustive enumeration.
class InstanceTooLargeError : public Error {
  public:
    using Error::Error;
};

/// A run configuration that is inconsistent with itself or the problem.
class ConfigError : public Error {
  public:
    using Error::Error;
};

/// Malformed input text (CSV or JSON).
class ParseError : public Error {
  public:
    using Error::Error;
};

} // namespace seedga
